// Command-line front end: enumeration, order comparisons, poset
// exports, orbit computations on explicit flags, degeneration-curve
// checks, and the library's self-verification sweeps.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clans/clan.hpp"
#include "clans/curves.hpp"
#include "clans/errors.hpp"
#include "clans/flag.hpp"
#include "clans/order.hpp"
#include "clans/poset.hpp"
#include "clans/rational.hpp"
#include "clans/verify.hpp"

using namespace clans;

namespace {

// Exit codes: 0 success or positive verdict, 1 negative verdict,
// 2 bad input, 3 internal verification failure.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "cannot write to " << path << "\n";
    return kBadInput;
  }
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sig_text(Signature sig) {
  return "(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

bool size_guarded(Signature sig, int max_size) {
  if (sig.n() <= max_size) return false;
  std::cerr << "refusing signature " << sig_text(sig) << ": p+q = "
            << sig.n() << " exceeds --max-size " << max_size << "\n";
  return true;
}

int run_enumerate(Signature sig, const std::string& out_path) {
  std::ostringstream o;
  for (const Clan& c : enumerate_clans(sig)) o << format_clan(c) << "\n";
  return emit(o.str(), out_path);
}

int run_rank(const std::string& text, const std::string& out_path) {
  const Clan c = parse_clan(text);
  const RankProfile r = rank_profile(c);
  const int n = c.size();
  std::ostringstream o;
  o << "clan: " << format_clan(c) << "\n";
  o << "signature: " << sig_text(c.signature()) << "\n";
  o << "plus: ";
  for (int i = 1; i <= n; ++i) o << " " << r.plus(i);
  o << "\nminus:";
  for (int i = 1; i <= n; ++i) o << " " << r.minus(i);
  o << "\npairs:";
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) o << " " << r.pairs(i, j);
  o << "\n";
  return emit(o.str(), out_path);
}

int run_compare(const std::string& a_text, const std::string& b_text) {
  const Clan a = parse_clan(a_text);
  const Clan b = parse_clan(b_text, a.signature());
  const std::string an = format_clan(a), bn = format_clan(b);
  if (a == b) {
    std::cout << an << " = " << bn << "\n";
  } else if (leq(a, b)) {
    std::cout << an << " < " << bn << "\n";
  } else if (leq(b, a)) {
    std::cout << bn << " < " << an << "\n";
  } else {
    std::cout << "incomparable\n";
    return kNegative;
  }
  return kOk;
}

int run_poset(Signature sig, const std::string& format, Execution ex,
              const std::string& out_path) {
  const ClanPoset poset = build_poset(sig, ex);
  std::string text = format == "json" ? export_hasse_json(poset) + "\n"
                                      : export_hasse_dot(poset);
  return emit(text, out_path);
}

int run_interval(Signature sig, const std::string& bottom_text,
                 const std::string& top_text, Execution ex,
                 const std::string& out_path) {
  const ClanPoset poset = build_poset(sig, ex);
  const int bottom = poset.index_of(parse_clan(bottom_text, sig));
  const int top = poset.index_of(parse_clan(top_text, sig));
  const IntervalReport rep = interval(poset, bottom, top);
  std::ostringstream o;
  o << "interval [" << format_clan(poset.nodes[bottom]) << ", "
    << format_clan(poset.nodes[top]) << "] in " << sig_text(sig) << "\n";
  o << "elements: " << rep.elements.size() << "\n";
  o << "length: " << rep.length << "\n";
  o << "chain: " << (rep.is_chain ? "yes" : "no") << "\n";
  o << "rank histogram:";
  for (int h : rep.rank_histogram) o << " " << h;
  o << "\n";
  for (int v : rep.elements) o << format_clan(poset.nodes[v]) << "\n";
  return emit(o.str(), out_path);
}

// Clan name for a witness index; -1 is the artificial bottom element.
std::string witness_name(const ClanPoset& poset, int v) {
  return v < 0 ? "bottom" : format_clan(poset.nodes[v]);
}

int run_properties(Signature sig, Execution ex, const std::string& out_path) {
  const ClanPoset poset = build_poset(sig, ex);
  const PosetProperties props = poset_properties(poset);
  std::ostringstream o;
  o << "signature: " << sig_text(sig) << "\n";
  o << "size: " << props.size << "\n";
  o << "covers: " << props.cover_count << "\n";
  o << "height: " << props.height << "\n";
  o << "minimal (" << props.minimal.size() << "):";
  for (int v : props.minimal) o << " " << format_clan(poset.nodes[v]);
  o << "\nmaximal (" << props.maximal.size() << "):";
  for (int v : props.maximal) o << " " << format_clan(poset.nodes[v]);
  o << "\nminimal are sign-only: "
    << (props.minimal_all_sign_only ? "yes" : "no") << "\n";
  o << "unique maximal: " << (props.unique_maximal ? "yes" : "no") << "\n";
  o << "pure: " << (props.pure ? "yes" : "no") << "\n";
  for (const auto& v : props.purity_violations)
    o << "  cover " << witness_name(poset, v.lower) << " -> "
      << witness_name(poset, v.upper) << " jumps rank " << v.rank_lower
      << " -> " << v.rank_upper << "\n";
  if (!props.lattice_checks_evaluated) {
    o << "thin: not evaluated (needs purity and a unique maximum)\n";
    o << "eulerian: not evaluated (needs purity and a unique maximum)\n";
    return emit(o.str(), out_path);
  }
  o << "thin (with bottom adjoined): " << (props.thin ? "yes" : "no");
  if (!props.thin) o << " (" << props.thin_violation_count << " violations)";
  o << "\n";
  for (const auto& v : props.thin_violations)
    o << "  [" << witness_name(poset, v.lower) << ", "
      << witness_name(poset, v.upper) << "] has " << v.middle_count
      << " middle element" << (v.middle_count == 1 ? "" : "s") << "\n";
  o << "eulerian (with bottom adjoined): "
    << (props.eulerian ? "yes" : "no");
  if (!props.eulerian)
    o << " (" << props.euler_violation_count << " violations)";
  o << "\n";
  for (const auto& v : props.euler_violations)
    o << "  [" << witness_name(poset, v.lower) << ", "
      << witness_name(poset, v.upper) << "] has " << v.even_count
      << " elements at even rank, " << v.odd_count << " at odd\n";
  return emit(o.str(), out_path);
}

int run_rep(const std::string& text, const std::string& out_path) {
  const Clan c = parse_clan(text);
  return emit(flag_to_json(yamamoto_representative(c)) + "\n", out_path);
}

int run_orbit(const std::string& file, Signature sig) {
  const Flag f = load_flag_json(read_file(file));
  std::cout << format_clan(orbit_of(f, sig)) << "\n";
  return kOk;
}

int run_closure(const std::string& file, const std::string& clan_text,
                Signature sig) {
  const Flag f = load_flag_json(read_file(file));
  const Clan tau = parse_clan(clan_text, sig);
  if (f.n() != sig.n())
    throw SignatureMismatchError("flag size differs from p+q");
  const bool inside = in_closure(f, tau);
  std::cout << "in closure(" << format_clan(tau) << "): "
            << (inside ? "yes" : "no") << "\n";
  return inside ? kOk : kNegative;
}

std::vector<Rational> parse_samples(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("no curve samples given");
  return out;
}

int run_curves(const std::string& samples_csv, const std::string& out_path) {
  const std::vector<Rational> samples = parse_samples(samples_csv);
  std::ostringstream o;
  o << "samples:";
  for (const Rational& t : samples) o << " " << t.str();
  o << "\n";
  int cases = 0, failed_cases = 0, items = 0, failed_items = 0;
  for (const CurveCase& c : standard_curve_cases()) {
    const CurveReport report = curve_check_report(c, samples);
    const std::string head = describe(c);
    ++cases;
    items += static_cast<int>(report.items.size());
    o << (report.ok() ? "[PASS] " : "[FAIL] ") << head << "\n";
    if (report.ok()) continue;
    ++failed_cases;
    failed_items += report.failures();
    for (const CurveCheckItem& item : report.items) {
      if (item.pass) continue;
      // Item labels repeat the case description; print the rest.
      o << "  - " << item.what.substr(head.size() + 2) << " ("
        << item.detail << ")\n";
    }
  }
  o << "cases: " << cases << ", items: " << items << ", failing items: "
    << failed_items << " in " << failed_cases << " cases\n";
  const int code = emit(o.str(), out_path);
  if (code != kOk) return code;
  return failed_items == 0 ? kOk : kInternal;
}

int run_verify(Signature sig, Execution ex, const std::string& out_path) {
  std::ostringstream o;
  int passed = 0, total = 0;
  auto print_suite = [&](const std::string& title,
                         const std::vector<CheckResult>& results) {
    o << title << "\n";
    for (const CheckResult& r : results) {
      o << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.pass && !r.detail.empty()) o << " (" << r.detail << ")";
      o << "\n";
      ++total;
      if (r.pass) ++passed;
    }
  };
  print_suite("order checks " + sig_text(sig) + ":", verify_order(sig, ex));
  print_suite("involution checks (n = " + std::to_string(sig.n()) + "):",
              verify_involutions(sig.n()));
  print_suite("geometry checks " + sig_text(sig) + ":",
              verify_geometry(sig));
  o << passed << "/" << total << " checks passed\n";
  const int code = emit(o.str(), out_path);
  if (code != kOk) return code;
  return passed == total ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order on (p,q)-clans: enumeration, poset exports, "
               "and exact geometric verification"};
  app.require_subcommand(1);

  int p = 0, q = 0;
  int max_size = 9;
  std::string clan_a, clan_b, flag_file, out_path;
  std::string format = "dot";
  std::string samples = "1,1/2,1/3,-1";
  bool serial = false;

  auto add_pq = [&](CLI::App* cmd) {
    cmd->add_option("p", p, "number of plus basis directions")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("q", q, "number of minus basis directions")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");
  };
  auto add_guard = [&](CLI::App* cmd) {
    cmd->add_option("--max-size", max_size,
                    "refuse exhaustive work beyond this p+q")
        ->capture_default_str();
  };
  auto add_serial = [&](CLI::App* cmd) {
    cmd->add_flag("--serial", serial,
                  "use the serial reference kernels instead of OpenMP");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate",
                                        "list all clans of a signature");
  add_pq(c_enum);
  add_output(c_enum);
  add_guard(c_enum);

  CLI::App* c_rank = app.add_subcommand("rank",
                                        "print the rank numbers of a clan");
  c_rank->add_option("CLAN", clan_a, "clan string")->required();
  add_output(c_rank);

  CLI::App* c_cmp = app.add_subcommand("compare",
                                       "compare two clans in the order");
  c_cmp->add_option("A", clan_a, "first clan")->required();
  c_cmp->add_option("B", clan_b, "second clan")->required();

  CLI::App* c_poset = app.add_subcommand("poset",
                                         "export the Hasse diagram");
  add_pq(c_poset);
  c_poset->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  add_output(c_poset);
  add_guard(c_poset);
  add_serial(c_poset);

  CLI::App* c_int = app.add_subcommand("interval",
                                       "describe one interval [BOTTOM, TOP]");
  add_pq(c_int);
  c_int->add_option("BOTTOM", clan_a, "lower endpoint")->required();
  c_int->add_option("TOP", clan_b, "upper endpoint")->required();
  add_output(c_int);
  add_guard(c_int);
  add_serial(c_int);

  CLI::App* c_props = app.add_subcommand("properties",
                                         "poset diagnostics for a signature");
  add_pq(c_props);
  add_output(c_props);
  add_guard(c_props);
  add_serial(c_props);

  CLI::App* c_rep = app.add_subcommand("rep",
                                       "orbit representative of a clan, as "
                                       "a flag in JSON");
  c_rep->add_option("CLAN", clan_a, "clan string")->required();
  add_output(c_rep);

  CLI::App* c_orbit = app.add_subcommand("orbit",
                                         "clan whose orbit contains a flag");
  c_orbit->add_option("FLAGFILE", flag_file, "flag in the JSON format")
      ->required()
      ->check(CLI::ExistingFile);
  add_pq(c_orbit);

  CLI::App* c_close = app.add_subcommand("closure",
                                         "is a flag in the closure of the "
                                         "orbit of CLAN?");
  c_close->add_option("FLAGFILE", flag_file, "flag in the JSON format")
      ->required()
      ->check(CLI::ExistingFile);
  c_close->add_option("CLAN", clan_a, "clan string")->required();
  add_pq(c_close);

  CLI::App* c_curves = app.add_subcommand("curves",
                                          "verify the tabulated degeneration "
                                          "curves for all ten moves");
  c_curves->add_option("--samples", samples,
                       "comma-separated nonzero rational parameters")
      ->capture_default_str();
  add_output(c_curves);

  CLI::App* c_verify = app.add_subcommand("verify",
                                          "run the full self-check sweep "
                                          "for a signature");
  add_pq(c_verify);
  add_output(c_verify);
  add_guard(c_verify);
  add_serial(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const Signature sig{p, q};
  const Execution ex = serial ? Execution::serial : Execution::parallel;
  try {
    if (*c_enum) {
      if (size_guarded(sig, max_size)) return kBadInput;
      return run_enumerate(sig, out_path);
    }
    if (*c_rank) return run_rank(clan_a, out_path);
    if (*c_cmp) return run_compare(clan_a, clan_b);
    if (*c_poset) {
      if (size_guarded(sig, max_size)) return kBadInput;
      return run_poset(sig, format, ex, out_path);
    }
    if (*c_int) {
      if (size_guarded(sig, max_size)) return kBadInput;
      return run_interval(sig, clan_a, clan_b, ex, out_path);
    }
    if (*c_props) {
      if (size_guarded(sig, max_size)) return kBadInput;
      return run_properties(sig, ex, out_path);
    }
    if (*c_rep) return run_rep(clan_a, out_path);
    if (*c_orbit) return run_orbit(flag_file, sig);
    if (*c_close) return run_closure(flag_file, clan_a, sig);
    if (*c_curves) return run_curves(samples, out_path);
    if (*c_verify) {
      if (size_guarded(sig, max_size)) return kBadInput;
      return run_verify(sig, ex, out_path);
    }
  } catch (const OrderMismatchError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kInternal;
  } catch (const CaseMismatchError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kInternal;
  } catch (const InconsistentProfileError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kInternal;
  } catch (const NotComparableError& e) {
    std::cerr << e.what() << "\n";
    return kNegative;
  } catch (const ClanError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
