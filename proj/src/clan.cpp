#include "clans/clan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace clans {

namespace {

void validate_signature(const Signature& sig) {
  if (sig.p < 0 || sig.q < 0 || sig.n() < 1)
    throw ClanError("signature must have p, q >= 0 and p + q >= 1");
}

}  // namespace

Clan::Clan(Signature sig, std::vector<int> code)
    : sig_(sig), code_(std::move(code)) {
  validate_signature(sig_);
  const int n = static_cast<int>(code_.size());
  if (n != sig_.n()) throw LengthMismatchError("clan length differs from p+q");
  int plus = 0, minus = 0;
  for (int i = 0; i < n; ++i) {
    const int c = code_[i];
    if (c == kPlus) {
      ++plus;
    } else if (c == kMinus) {
      ++minus;
    } else if (c < 0 || c >= n || c == i || code_[c] != i) {
      throw ClanError("malformed arc structure in clan code");
    }
  }
  if (plus - minus != sig_.p - sig_.q)
    throw SignatureMismatchError("#(+) - #(-) must equal p - q");
}

int Clan::mate(int i) const {
  if (!is_arc(i)) throw ClanError("mate() on a sign position");
  return code_[i - 1] + 1;
}

int Clan::arc_count() const {
  int ends = 0;
  for (int c : code_)
    if (c >= 0) ++ends;
  return ends / 2;
}

bool Clan::sign_only() const { return arc_count() == 0; }

namespace {

// Sort key of one position: symbol class, then mate for arc ends.
inline std::pair<int, int> symbol_key(const Clan& c, int i) {
  if (c.is_plus(i)) return {0, 0};
  if (c.is_minus(i)) return {1, 0};
  if (c.is_arc_first(i)) return {2, c.mate(i)};
  return {3, c.mate(i)};
}

}  // namespace

bool enumeration_less(const Clan& a, const Clan& b) {
  const int n = std::min(a.size(), b.size());
  for (int i = 1; i <= n; ++i) {
    const auto ka = symbol_key(a, i), kb = symbol_key(b, i);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  const bool spaced =
      text.find_first_of(" \t\r\n") != std::string::npos;
  std::vector<std::string> toks;
  if (spaced) {
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks.push_back(t);
  } else {
    for (char ch : text) toks.emplace_back(1, ch);
  }
  return toks;
}

Clan parse_tokens(const std::vector<std::string>& toks, Signature sig) {
  const int n = static_cast<int>(toks.size());
  if (n != sig.n())
    throw LengthMismatchError("clan text has " + std::to_string(n) +
                              " symbols, signature needs " +
                              std::to_string(sig.n()));
  std::vector<int> code(n, Clan::kPlus);
  std::map<long long, int> first_seen;  // label -> 0-based position
  int plus = 0, minus = 0;
  for (int i = 0; i < n; ++i) {
    const std::string& t = toks[i];
    if (t == "+") {
      code[i] = Clan::kPlus;
      ++plus;
      continue;
    }
    if (t == "-") {
      code[i] = Clan::kMinus;
      ++minus;
      continue;
    }
    if (t.empty() ||
        !std::all_of(t.begin(), t.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("bad clan symbol '" + t + "'");
    const long long label = std::stoll(t);
    if (label <= 0) throw ParseError("arc labels must be positive");
    auto it = first_seen.find(label);
    if (it == first_seen.end()) {
      first_seen.emplace(label, i);
    } else if (it->second < 0) {
      throw UnmatchedArcLabelError("arc label " + t +
                                   " occurs more than twice");
    } else {
      code[i] = it->second;
      code[it->second] = i;
      it->second = -1;  // closed
    }
  }
  for (const auto& [label, pos] : first_seen)
    if (pos >= 0)
      throw UnmatchedArcLabelError("arc label " + std::to_string(label) +
                                   " occurs only once");
  if (plus - minus != sig.p - sig.q)
    throw SignatureMismatchError(
        "#(+) - #(-) = " + std::to_string(plus - minus) +
        " but p - q = " + std::to_string(sig.p - sig.q));
  return Clan(sig, std::move(code));
}

}  // namespace

Clan parse_clan(const std::string& text, Signature sig) {
  validate_signature(sig);
  return parse_tokens(tokenize(text), sig);
}

Clan parse_clan(const std::string& text) {
  const auto toks = tokenize(text);
  int plus = 0, minus = 0, ends = 0;
  for (const auto& t : toks) {
    if (t == "+")
      ++plus;
    else if (t == "-")
      ++minus;
    else
      ++ends;
  }
  if (ends % 2 != 0)
    throw UnmatchedArcLabelError("odd number of arc ends");
  const Signature sig{plus + ends / 2, minus + ends / 2};
  return parse_tokens(toks, sig);
}

std::string format_clan(const Clan& c) {
  const int n = c.size();
  std::vector<int> label(n + 1, 0);
  int next = 1;
  std::vector<std::string> toks;
  toks.reserve(n);
  for (int i = 1; i <= n; ++i) {
    if (c.is_plus(i)) {
      toks.emplace_back("+");
    } else if (c.is_minus(i)) {
      toks.emplace_back("-");
    } else {
      if (c.is_arc_first(i)) label[i] = next++;
      toks.push_back(std::to_string(c.is_arc_first(i) ? label[i]
                                                      : label[c.mate(i)]));
    }
  }
  std::string out;
  const bool compact = c.arc_count() <= 9;
  for (int i = 0; i < n; ++i) {
    if (!compact && i) out += ' ';
    out += toks[i];
  }
  return out;
}

namespace {

void enumerate_rec(Signature sig, int pos, int plus_used, int minus_used,
                   std::vector<int>& code, std::vector<int>& open,
                   std::vector<Clan>& out) {
  const int n = sig.n();
  if (pos == n) {
    if (open.empty() && plus_used - minus_used == sig.p - sig.q)
      out.emplace_back(sig, code);
    return;
  }
  const int remaining = n - pos;
  if (static_cast<int>(open.size()) > remaining) return;
  // close one of the open arcs
  for (std::size_t oi = 0; oi < open.size(); ++oi) {
    const int s = open[oi];
    code[pos] = s;
    code[s] = pos;
    open.erase(open.begin() + static_cast<long>(oi));
    enumerate_rec(sig, pos + 1, plus_used, minus_used, code, open, out);
    open.insert(open.begin() + static_cast<long>(oi), s);
    code[s] = -3;
  }
  // open a new arc (needs room to close it later)
  if (static_cast<int>(open.size()) + 1 < remaining) {
    open.push_back(pos);
    code[pos] = -3;
    enumerate_rec(sig, pos + 1, plus_used, minus_used, code, open, out);
    open.pop_back();
  }
  if (plus_used < sig.p) {
    code[pos] = Clan::kPlus;
    enumerate_rec(sig, pos + 1, plus_used + 1, minus_used, code, open, out);
  }
  if (minus_used < sig.q) {
    code[pos] = Clan::kMinus;
    enumerate_rec(sig, pos + 1, plus_used, minus_used + 1, code, open, out);
  }
}

}  // namespace

std::vector<Clan> enumerate_clans(Signature sig) {
  validate_signature(sig);
  std::vector<Clan> out;
  std::vector<int> code(sig.n(), -3), open;
  enumerate_rec(sig, 0, 0, 0, code, open, out);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

RankProfile::RankProfile(Signature sig, std::vector<std::uint8_t> data)
    : sig_(sig), n_(sig.n()), data_(std::move(data)) {
  if (static_cast<int>(data_.size()) != data_size(n_))
    throw ClanError("rank profile storage size mismatch");
}

RankProfile rank_profile(const Clan& c) {
  const int n = c.size();
  std::vector<std::uint8_t> d(RankProfile::data_size(n), 0);
  int plus = 0, minus = 0, complete = 0;
  for (int i = 1; i <= n; ++i) {
    if (c.is_plus(i)) ++plus;
    if (c.is_minus(i)) ++minus;
    if (c.is_arc(i) && c.mate(i) < i) ++complete;
    d[i - 1] = static_cast<std::uint8_t>(plus + complete);
    d[n + i - 1] = static_cast<std::uint8_t>(minus + complete);
  }
  // each arc s..t feeds every (i,j) with s <= i < j < t
  for (int s = 1; s <= n; ++s) {
    if (!c.is_arc_first(s)) continue;
    const int t = c.mate(s);
    for (int i = s; i <= t - 2; ++i)
      for (int j = i + 1; j <= t - 1; ++j)
        ++d[2 * n + RankProfile::pair_index(n, i, j)];
  }
  return RankProfile(c.signature(), std::move(d));
}

Clan clan_from_rank_profile(const RankProfile& r) {
  const int n = r.size();
  enum Kind { kFirst, kSecond, kSignPlus, kSignMinus };
  std::vector<Kind> kind(n + 1);
  for (int i = 1; i <= n; ++i) {
    const int dp = r.plus(i) - (i > 1 ? r.plus(i - 1) : 0);
    const int dm = r.minus(i) - (i > 1 ? r.minus(i - 1) : 0);
    if (dp < 0 || dp > 1 || dm < 0 || dm > 1)
      throw InconsistentProfileError("rank rows must step by 0 or 1");
    kind[i] = dp ? (dm ? kSecond : kSignPlus) : (dm ? kSignMinus : kFirst);
  }
  std::vector<int> code(n, Clan::kPlus);
  std::vector<int> unmated;  // 1-based first-end positions, ascending
  for (int k = 1; k <= n; ++k) {
    switch (kind[k]) {
      case kSignPlus:
        code[k - 1] = Clan::kPlus;
        break;
      case kSignMinus:
        code[k - 1] = Clan::kMinus;
        break;
      case kFirst:
        unmated.push_back(k);
        break;
      case kSecond: {
        int hit = -1;
        for (std::size_t l = 0; l < unmated.size(); ++l) {
          if (r.pairs(unmated[l], k) < static_cast<int>(l) + 1) {
            hit = static_cast<int>(l);
            break;
          }
        }
        if (hit < 0)
          throw InconsistentProfileError(
              "no opening matches the arc closing at position " +
              std::to_string(k));
        const int i = unmated[hit];
        unmated.erase(unmated.begin() + hit);
        code[i - 1] = k - 1;
        code[k - 1] = i - 1;
        break;
      }
    }
  }
  if (!unmated.empty())
    throw InconsistentProfileError("unclosed arc opening at position " +
                                   std::to_string(unmated.front()));
  if (r.plus(n) != r.signature().p || r.minus(n) != r.signature().q)
    throw InconsistentProfileError("rank totals disagree with the signature");
  Clan c(r.signature(), std::move(code));
  if (!(rank_profile(c) == r))
    throw InconsistentProfileError("profile is not realized by any clan");
  return c;
}

InvolutionString::InvolutionString(std::vector<int> code)
    : code_(std::move(code)) {
  const int n = static_cast<int>(code_.size());
  if (n < 1) throw ClanError("empty involution string");
  for (int i = 0; i < n; ++i) {
    const int c = code_[i];
    if (c == kDot) continue;
    if (c < 0 || c >= n || c == i || code_[c] != i)
      throw ClanError("malformed arc structure in involution code");
  }
}

int InvolutionString::mate(int i) const {
  if (is_dot(i)) throw ClanError("mate() on a dot position");
  return code_[i - 1] + 1;
}

InvolutionString underlying_involution(const Clan& c) {
  std::vector<int> code(c.code());
  for (int& v : code)
    if (v < 0) v = InvolutionString::kDot;
  return InvolutionString(std::move(code));
}

std::string format_involution(const InvolutionString& v) {
  const int n = v.size();
  std::vector<int> label(n + 1, 0);
  int next = 1;
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (v.is_dot(i)) {
      out += '.';
    } else {
      if (v.mate(i) > i) label[i] = next++;
      const int lab = v.mate(i) > i ? label[i] : label[v.mate(i)];
      if (next > 10) out += ' ';  // crude, but 10+ arcs never happens here
      out += std::to_string(lab);
    }
  }
  return out;
}

namespace {

void involutions_rec(int n, int pos, std::vector<int>& code,
                     std::vector<InvolutionString>& out) {
  while (pos < n && code[pos] != -3) ++pos;
  if (pos == n) {
    out.emplace_back(code);
    return;
  }
  code[pos] = InvolutionString::kDot;
  involutions_rec(n, pos + 1, code, out);
  for (int j = pos + 1; j < n; ++j) {
    if (code[j] != -3) continue;
    code[pos] = j;
    code[j] = pos;
    involutions_rec(n, pos + 1, code, out);
    code[j] = -3;
  }
  code[pos] = -3;
}

}  // namespace

std::vector<InvolutionString> enumerate_involutions(int n) {
  if (n < 1) throw ClanError("involution length must be positive");
  std::vector<InvolutionString> out;
  std::vector<int> code(n, -3);
  involutions_rec(n, 0, code, out);
  return out;
}

}  // namespace clans
