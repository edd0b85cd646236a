#include "qsymm/root_system.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsymm {

WeightVec SignedPerm::apply(const WeightVec& v) const {
  WeightVec r(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<std::size_t>(perm[i])] = sign[i] * v[i];
  return r;
}

SignedPerm SignedPerm::compose(const SignedPerm& inner) const {
  SignedPerm r{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto j = static_cast<std::size_t>(inner.perm[i]);
    r.perm[i] = perm[j];
    r.sign[i] = inner.sign[i] * sign[j];
  }
  return r;
}

namespace {

WeightVec unit_vec(std::size_t n, std::size_t i, int c = 1) {
  WeightVec v(n, 0);
  v[i] = c;
  return v;
}

WeightVec combo(std::size_t n, std::size_t i, int a, std::size_t j, int b) {
  WeightVec v(n, 0);
  v[i] += a;
  v[j] += b;
  return v;
}

SignedPerm transposition(std::size_t n, std::size_t i, std::size_t j) {
  SignedPerm s{std::vector<int>(n), std::vector<int>(n, 1)};
  for (std::size_t k = 0; k < n; ++k) s.perm[k] = static_cast<int>(k);
  std::swap(s.perm[i], s.perm[j]);
  return s;
}

SignedPerm sign_flip(std::size_t n, std::size_t i) {
  SignedPerm s = transposition(n, 0, 0);
  s.sign[i] = -1;
  return s;
}

// Solve sum_i c_i simple_i = d exactly; nullopt when d is outside the span.
std::optional<std::vector<ExactScalar>> simple_coordinates(const RootSystemData& rs, const WeightVec& d) {
  const std::size_t rows = rs.dim(), cols = rs.simple_roots.size();
  std::vector<std::vector<ExactScalar>> m(rows, std::vector<ExactScalar>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rs.simple_roots[j][i];
    m[i][cols] = d[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      ExactScalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<ExactScalar> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = m[i][cols] / m[i][pivcol[i]];
  return x;
}

}  // namespace

std::string RootSystemData::label() const {
  static const char* names[] = {"A", "B", "C", "D", "BC"};
  return names[static_cast<int>(kind)] + std::to_string(rank);
}

RootSystemData make_root_system(RootKind kind, int rank) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("rank outside the supported envelope 1..4");
  if (kind == RootKind::D && rank < 2) throw std::invalid_argument("D_l needs l >= 2");
  RootSystemData rs;
  rs.kind = kind;
  rs.rank = rank;
  const std::size_t n = rs.dim();
  const auto l = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rs.positive_roots.push_back(combo(n, i, 1, j, -1));
      if (kind != RootKind::A) rs.positive_roots.push_back(combo(n, i, 1, j, 1));
    }
  if (kind == RootKind::B || kind == RootKind::BC)
    for (std::size_t i = 0; i < n; ++i) rs.positive_roots.push_back(unit_vec(n, i));
  if (kind == RootKind::C || kind == RootKind::BC)
    for (std::size_t i = 0; i < n; ++i) rs.positive_roots.push_back(unit_vec(n, i, 2));
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  std::size_t chain = kind == RootKind::A ? l : l - 1;
  for (std::size_t i = 0; i < chain; ++i) {
    rs.simple_roots.push_back(combo(n, i, 1, i + 1, -1));
    rs.weyl_generators.push_back(transposition(n, i, i + 1));
  }
  switch (kind) {
    case RootKind::A: break;
    case RootKind::B:
    case RootKind::BC:
      rs.simple_roots.push_back(unit_vec(n, l - 1));
      rs.weyl_generators.push_back(sign_flip(n, l - 1));
      break;
    case RootKind::C:
      rs.simple_roots.push_back(unit_vec(n, l - 1, 2));
      rs.weyl_generators.push_back(sign_flip(n, l - 1));
      break;
    case RootKind::D: {
      rs.simple_roots.push_back(combo(n, l - 2, 1, l - 1, 1));
      SignedPerm s = transposition(n, l - 2, l - 1);
      s.sign[l - 2] = s.sign[l - 1] = -1;
      rs.weyl_generators.push_back(s);
      break;
    }
  }
  for (const auto& a : rs.positive_roots) rs.multiplicity[a] = 0;
  return rs;
}

RootSystemData parse_root_system(std::string_view token) {
  std::string s(token);
  RootKind kind;
  std::size_t pos;
  if (s.rfind("BC", 0) == 0) {
    kind = RootKind::BC;
    pos = 2;
  } else if (!s.empty() && std::string("ABCD").find(s[0]) != std::string::npos) {
    kind = static_cast<RootKind>(std::string("ABCD").find(s[0]));
    pos = 1;
  } else {
    throw std::invalid_argument("unknown root system '" + s + "'");
  }
  std::string digits = s.substr(pos);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("missing rank in '" + s + "'");
  return make_root_system(kind, std::stoi(digits));
}

int inner(const WeightVec& a, const WeightVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void set_multiplicity_by_length(RootSystemData& rs, const std::map<int, ExactScalar>& by_len2) {
  for (const auto& a : rs.positive_roots) {
    auto it = by_len2.find(inner(a, a));
    rs.multiplicity[a] = it == by_len2.end() ? ExactScalar(0) : it->second;
  }
}

bool multiplicity_is_weyl_invariant(const RootSystemData& rs) {
  auto k_of = [&](WeightVec a) -> std::optional<ExactScalar> {
    auto it = rs.multiplicity.find(a);
    if (it != rs.multiplicity.end()) return it->second;
    for (auto& x : a) x = -x;
    it = rs.multiplicity.find(a);
    if (it != rs.multiplicity.end()) return it->second;
    return std::nullopt;
  };
  for (const auto& [a, k] : rs.multiplicity)
    for (const auto& w : rs.weyl_generators) {
      auto kw = k_of(w.apply(a));
      if (!kw || *kw != k) return false;
    }
  return true;
}

std::vector<SignedPerm> weyl_group(const RootSystemData& rs) {
  const std::size_t n = rs.dim();
  SignedPerm id = transposition(n, 0, 0);
  std::set<SignedPerm> seen{id};
  std::vector<SignedPerm> frontier{id}, all{id};
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const auto& w : frontier)
      for (const auto& g : rs.weyl_generators) {
        SignedPerm x = g.compose(w);
        if (seen.insert(x).second) {
          next.push_back(x);
          all.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  return all;
}

std::vector<WeightVec> weyl_orbit(const RootSystemData& rs, const WeightVec& lambda) {
  if (lambda.size() != rs.dim()) throw std::invalid_argument("weight length does not match root system");
  std::set<WeightVec> seen{lambda};
  std::vector<WeightVec> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& v : frontier)
      for (const auto& g : rs.weyl_generators) {
        WeightVec w = g.apply(v);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_dominant(const RootSystemData& rs, const WeightVec& lambda) {
  if (lambda.size() != rs.dim()) return false;
  for (const auto& a : rs.simple_roots)
    if (inner(lambda, a) < 0) return false;
  return true;
}

WeightVec dominant_representative(const RootSystemData& rs, const WeightVec& mu) {
  for (const auto& v : weyl_orbit(rs, mu))
    if (is_dominant(rs, v)) return v;
  throw std::logic_error("orbit without dominant element");
}

LaurentPoly orbit_sum(const RootSystemData& rs, const WeightVec& lambda, const VarTablePtr& table,
                      const std::vector<std::size_t>& xvars) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("orbit_sum needs a dominant weight");
  if (xvars.size() != rs.dim()) throw std::invalid_argument("need one variable per epsilon coordinate");
  std::vector<Term> terms;
  for (const auto& mu : weyl_orbit(rs, lambda)) {
    Term t;
    for (std::size_t i = 0; i < mu.size(); ++i) t.mono.exp[xvars[i]] += mu[i];
    t.coeff = 1;
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(table, std::move(terms));
}

bool dominance_leq(const RootSystemData& rs, const WeightVec& mu, const WeightVec& lambda) {
  if (mu.size() != rs.dim() || lambda.size() != rs.dim()) throw std::invalid_argument("weight length mismatch");
  WeightVec d(mu.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = lambda[i] - mu[i];
  auto c = simple_coordinates(rs, d);
  if (!c) return false;
  for (const auto& x : *c)
    if (x < 0) return false;
  return true;
}

std::vector<WeightVec> dominant_weights_below(const RootSystemData& rs, const WeightVec& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("dominant_weights_below needs a dominant weight");
  const std::size_t n = rs.dim();
  int hi = 0, lo = 0;
  for (int x : lambda) {
    hi = std::max(hi, std::abs(x));
    lo = std::min(lo, x);
  }
  if (rs.kind == RootKind::A) {
    hi = *std::max_element(lambda.begin(), lambda.end());
    lo = *std::min_element(lambda.begin(), lambda.end());
  } else {
    lo = -hi;
  }
  std::vector<WeightVec> out;
  WeightVec cur(n, lo);
  while (true) {
    if (is_dominant(rs, cur)) {
      WeightVec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = lambda[i] - cur[i];
      auto c = simple_coordinates(rs, d);
      bool ok = c.has_value();
      if (ok)
        for (const auto& x : *c)
          if (x < 0 || x.get_den() != 1) ok = false;
      if (ok) out.push_back(cur);
    }
    std::size_t i = 0;
    while (i < n && cur[i] == hi) cur[i++] = lo;
    if (i == n) break;
    ++cur[i];
  }
  auto height = [&](const WeightVec& w) {
    long h = 0;
    for (std::size_t i = 0; i < n; ++i) h += static_cast<long>(n - i) * w[i];
    return h;
  };
  std::sort(out.begin(), out.end(), [&](const WeightVec& a, const WeightVec& b) {
    long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

std::string weight_to_string(const WeightVec& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

WeightVec parse_weight(std::string_view text) {
  WeightVec w;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("malformed weight '" + s + "'");
    w.push_back(v);
  }
  if (w.empty()) throw std::invalid_argument("empty weight");
  return w;
}

}  // namespace qsymm
