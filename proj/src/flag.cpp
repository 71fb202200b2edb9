#include "clans/flag.hpp"

#include <utility>

#include "clans/order.hpp"
#include "json.hpp"

namespace clans {

Flag::Flag(RatMatrix columns) : cols_(std::move(columns)) {
  if (cols_.rows != cols_.cols || cols_.rows < 1)
    throw InvalidFlagError("flag basis must be square and nonempty");
  if (rank_of(cols_) != cols_.cols)
    throw InvalidFlagError("flag columns are linearly dependent");
}

Flag apply(const RatMatrix& g, const Flag& f) {
  if (g.rows != f.n() || g.cols != f.n())
    throw InvalidFlagError("transform shape does not match the flag");
  return Flag(mul(g, f.columns()));
}

namespace {

void check_split(const Flag& f, Signature sig) {
  if (sig.n() != f.n())
    throw SignatureMismatchError("signature size differs from the flag");
}

// Columns of the identity spanning the requested coordinate part.
RatMatrix part_basis(SplitPart part, Signature sig) {
  const int n = sig.n();
  const int width = part == SplitPart::plus_part ? sig.p : sig.q;
  const int first = part == SplitPart::plus_part ? 0 : sig.p;
  RatMatrix out(n, width);
  for (int j = 0; j < width; ++j) out.at(first + j, j) = 1;
  return out;
}

}  // namespace

int dim_intersection(const Flag& f, int i, SplitPart part, Signature sig) {
  check_split(f, sig);
  if (i < 1 || i > f.n()) throw ClanError("flag step out of range");
  const int width = part == SplitPart::plus_part ? sig.p : sig.q;
  const RatMatrix joint =
      hstack(column_prefix(f.columns(), i), part_basis(part, sig));
  // dim(U cap W) = dim U + dim W - dim(U + W)
  return i + width - rank_of(joint);
}

int dim_projection_sum(const Flag& f, int i, int j, Signature sig) {
  check_split(f, sig);
  if (!(1 <= i && i < j && j <= f.n()))
    throw ClanError("projection sum needs 1 <= i < j <= n");
  RatMatrix projected = column_prefix(f.columns(), i);
  for (int r = sig.p; r < sig.n(); ++r)
    for (int c = 0; c < projected.cols; ++c) projected.at(r, c) = 0;
  return rank_of(hstack(projected, column_prefix(f.columns(), j)));
}

RankProfile geometric_profile(const Flag& f, Signature sig) {
  check_split(f, sig);
  const int n = sig.n();
  std::vector<std::uint8_t> data(RankProfile::data_size(n), 0);
  for (int i = 1; i <= n; ++i) {
    data[i - 1] = static_cast<std::uint8_t>(
        dim_intersection(f, i, SplitPart::plus_part, sig));
    data[n + i - 1] = static_cast<std::uint8_t>(
        dim_intersection(f, i, SplitPart::minus_part, sig));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      data[2 * n + RankProfile::pair_index(n, i, j)] =
          static_cast<std::uint8_t>(dim_projection_sum(f, i, j, sig) - j);
  return RankProfile(sig, std::move(data));
}

Clan orbit_of(const Flag& f, Signature sig) {
  return clan_from_rank_profile(geometric_profile(f, sig));
}

bool in_closure(const Flag& f, const Clan& tau) {
  // The flag's geometric profile is the rank profile of its orbit, so
  // closure membership is exactly the closure order on profiles.
  return leq(geometric_profile(f, tau.signature()), rank_profile(tau));
}

Flag yamamoto_representative(const Clan& c) {
  YamamotoChoice all_first;
  all_first.plus_on_first.assign(c.arc_count(), true);
  return yamamoto_representative(c, all_first);
}

Flag yamamoto_representative(const Clan& c, const YamamotoChoice& choice) {
  const int n = c.size();
  if (static_cast<int>(choice.plus_on_first.size()) != c.arc_count())
    throw ClanError("one plus-end choice per arc required");

  std::vector<int> arc_index(n + 1, -1);
  int arcs = 0;
  for (int i = 1; i <= n; ++i)
    if (c.is_arc_first(i)) {
      arc_index[i] = arcs;
      arc_index[c.mate(i)] = arcs;
      ++arcs;
    }

  auto in_plus_class = [&](int i) {
    if (c.is_sign(i)) return c.is_plus(i);
    const bool first = c.is_arc_first(i);
    return choice.plus_on_first[arc_index[i]] == first;
  };

  std::vector<int> sigma(n + 1, 0);
  int next_plus = 1;
  int next_minus = c.signature().p + 1;
  for (int i = 1; i <= n; ++i)
    sigma[i] = in_plus_class(i) ? next_plus++ : next_minus++;

  RatMatrix cols(n, n);
  for (int i = 1; i <= n; ++i) {
    if (c.is_sign(i)) {
      cols.at(sigma[i] - 1, i - 1) = 1;
    } else if (in_plus_class(i)) {
      cols.at(sigma[i] - 1, i - 1) = 1;
      cols.at(sigma[c.mate(i)] - 1, i - 1) = 1;
    } else {
      cols.at(sigma[i] - 1, i - 1) = -1;
      cols.at(sigma[c.mate(i)] - 1, i - 1) = 1;
    }
  }
  return Flag(std::move(cols));
}

bool same_flag(const Flag& a, const Flag& b) {
  if (a.n() != b.n()) return false;
  for (int i = 1; i <= a.n(); ++i) {
    const RatMatrix joint =
        hstack(column_prefix(a.columns(), i), column_prefix(b.columns(), i));
    if (rank_of(joint) != i) return false;
  }
  return true;
}

Flag load_flag_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("flag file is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("columns") ||
      !j["n"].is_number_integer() || !j["columns"].is_array())
    throw ParseError("flag JSON needs an integer \"n\" and \"columns\"");
  const int n = j["n"].get<int>();
  if (n < 1 || static_cast<int>(j["columns"].size()) != n)
    throw ParseError("flag JSON needs exactly n columns");
  std::vector<std::vector<Rational>> cols(n);
  for (int cidx = 0; cidx < n; ++cidx) {
    const auto& col = j["columns"][cidx];
    if (!col.is_array() || static_cast<int>(col.size()) != n)
      throw ParseError("each flag column needs exactly n entries");
    for (const auto& entry : col) {
      if (entry.is_number_integer())
        cols[cidx].push_back(Rational(entry.get<std::int64_t>()));
      else if (entry.is_string())
        cols[cidx].push_back(parse_rational(entry.get<std::string>()));
      else
        throw ParseError("flag entries must be integers or \"a/b\" strings");
    }
  }
  return Flag(from_columns(n, cols));
}

std::string flag_to_json(const Flag& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n();
  j["columns"] = nlohmann::ordered_json::array();
  for (int c = 0; c < f.n(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (int r = 0; r < f.n(); ++r) col.push_back(f.columns().at(r, c).str());
    j["columns"].push_back(std::move(col));
  }
  return j.dump(2);
}

}  // namespace clans
