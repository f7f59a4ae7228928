#include "taut/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "taut/error.hpp"

namespace taut {

int YoungPartition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string YoungPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) s += ",";
    s += std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

YoungPartition YoungPartition::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') t += c;
  }
  YoungPartition p;
  if (t.find(',') == std::string::npos && t.find('^') == std::string::npos) {
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::Parse, "bad partition '" + text + "'");
      p.parts.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t end = t.find(',', pos);
      if (end == std::string::npos) end = t.size();
      std::string item = t.substr(pos, end - pos);
      std::size_t caret = item.find('^');
      try {
        int part = std::stoi(item.substr(0, caret));
        int rep = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
        for (int k = 0; k < rep; ++k) p.parts.push_back(part);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad partition '" + text + "'");
      }
      pos = end + 1;
    }
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  if (p.parts.empty() || p.parts.back() <= 0 || p.size() != 6) {
    throw Error(ErrorCode::Parse, "'" + text + "' is not a partition of 6");
  }
  return p;
}

const std::vector<YoungPartition>& partitions_of_6() {
  static const std::vector<YoungPartition> all = {
      {{6}}, {{5, 1}}, {{4, 2}}, {{4, 1, 1}}, {{3, 3}}, {{3, 2, 1}},
      {{3, 1, 1, 1}}, {{2, 2, 2}}, {{2, 2, 1, 1}}, {{2, 1, 1, 1, 1}}, {{1, 1, 1, 1, 1, 1}},
  };
  return all;
}

std::size_t partition_position(const YoungPartition& lambda) {
  const auto& all = partitions_of_6();
  auto it = std::find(all.begin(), all.end(), lambda);
  if (it == all.end()) throw Error(ErrorCode::InvalidArgument, "not a partition of 6");
  return static_cast<std::size_t>(it - all.begin());
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from x to x - r; the sign counts the beads jumped over.
long mn(std::vector<int> beta, const std::vector<int>& mu, std::size_t k) {
  if (k == mu.size()) return 1;
  const int r = mu[k];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int x = beta[i];
    const int y = x - r;
    if (y < 0 || std::find(beta.begin(), beta.end(), y) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > y && b < x) ++between;
    }
    std::vector<int> next = beta;
    next[i] = y;
    total += (between % 2 == 0 ? 1 : -1) * mn(next, mu, k + 1);
  }
  return total;
}

}  // namespace

long character(const YoungPartition& lambda, const YoungPartition& mu) {
  const std::size_t n = lambda.parts.size();
  std::vector<int> beta;
  for (std::size_t i = 0; i < n; ++i) beta.push_back(lambda.parts[i] + static_cast<int>(n - 1 - i));
  return mn(beta, mu.parts, 0);
}

long class_size(const YoungPartition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  long z = 1;
  for (const auto& [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    for (int k = 2; k <= m; ++k) z *= k;
  }
  return 720 / z;
}

YoungPartition cycle_type(const Perm6& sigma) {
  std::array<bool, 6> seen{};
  YoungPartition p;
  for (int i = 0; i < 6; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)] - 1) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    p.parts.push_back(len);
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

Perm6 class_representative(const YoungPartition& mu) {
  Perm6 s{};
  int start = 0;
  for (int len : mu.parts) {
    for (int k = 0; k < len; ++k) s[static_cast<std::size_t>(start + k)] = start + (k + 1) % len + 1;
    start += len;
  }
  return s;
}

const std::vector<Perm6>& all_permutations() {
  static const std::vector<Perm6> perms = [] {
    std::vector<Perm6> out;
    Perm6 p = perm_identity();
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

namespace {

Monomial act_on_monomial(const Perm6& sigma, const Monomial& m) {
  Monomial r = m;
  for (int i = 1; i <= 6; ++i) {
    for (int c = 1; c <= 2; ++c) r[var::l(sigma[static_cast<std::size_t>(i - 1)], c)] = m[var::l(i, c)];
  }
  return r;
}

}  // namespace

std::vector<std::vector<GaussRat>> action_matrix(const CovariantSpace& space, const Perm6& sigma) {
  const std::size_t n = space.dim();
  const Perm6 inv = perm_inverse(sigma);
  std::vector<std::vector<GaussRat>> m(n, std::vector<GaussRat>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Monomial src = act_on_monomial(inv, space.pivots()[j]);
    for (std::size_t k = 0; k < n; ++k) m[j][k] = space.rows()[k].coefficient(src);
  }
  return m;
}

void require_s6_stable(const CovariantSpace& space) {
  for (const Perm6& g : {Perm6{2, 1, 3, 4, 5, 6}, Perm6{2, 3, 4, 5, 6, 1}}) {
    for (const auto& row : space.rows()) {
      if (!space.contains(s6_act(g, row))) {
        throw Error(ErrorCode::NotClosedUnderAction, "space is not stable under the S6 index action");
      }
    }
  }
}

std::vector<IsotypicPart> decompose(const CovariantSpace& space) {
  require_s6_stable(space);
  std::vector<mpq_class> traces;
  for (const auto& mu : partitions_of_6()) {
    const Perm6 sigma = class_representative(mu);
    const Perm6 inv = perm_inverse(sigma);
    mpq_class tr = 0;
    for (std::size_t k = 0; k < space.dim(); ++k) {
      tr += space.rows()[k].coefficient(act_on_monomial(inv, space.pivots()[k])).re();
    }
    traces.push_back(tr);
  }
  std::vector<IsotypicPart> out;
  for (const auto& lambda : partitions_of_6()) {
    mpq_class m = 0;
    for (std::size_t c = 0; c < traces.size(); ++c) {
      const auto& mu = partitions_of_6()[c];
      m += mpq_class(class_size(mu) * character(lambda, mu)) * traces[c];
    }
    m /= 720;
    if (m.get_den() != 1) throw Error(ErrorCode::NotClosedUnderAction, "non-integral multiplicity");
    if (m == 0) continue;
    const long dim = character(lambda, YoungPartition{{1, 1, 1, 1, 1, 1}});
    out.push_back({lambda, m.get_num().get_si(), m.get_num().get_si() * dim});
  }
  return out;
}

std::vector<std::vector<GaussRat>> isotypic_projector(const CovariantSpace& space, const YoungPartition& lambda) {
  require_s6_stable(space);
  const std::size_t n = space.dim();
  std::vector<std::vector<GaussRat>> p(n, std::vector<GaussRat>(n));
  for (const auto& sigma : all_permutations()) {
    const long chi = character(lambda, cycle_type(sigma));
    if (chi == 0) continue;
    const auto m = action_matrix(space, sigma);
    const GaussRat w(chi);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!m[j][k].is_zero()) p[j][k] += w * m[j][k];
      }
    }
  }
  const GaussRat scale = GaussRat::rational(character(lambda, YoungPartition{{1, 1, 1, 1, 1, 1}}), 720);
  for (auto& row : p) {
    for (auto& x : row) x *= scale;
  }
  return p;
}

namespace {

// Indices of a maximal independent subset of the columns, scanning left to right.
std::vector<std::size_t> independent_columns(const std::vector<std::vector<GaussRat>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<GaussRat>> basis;  // reduced column vectors
  std::vector<std::size_t> pivot_row;
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<GaussRat> v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = m[r][c];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const GaussRat coef = v[pivot_row[b]];
      if (coef.is_zero()) continue;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!basis[b][r].is_zero()) v[r] -= coef * basis[b][r];
      }
    }
    std::size_t pr = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!v[r].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr == rows) continue;
    const GaussRat inv = v[pr].inverse();
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    pivot_row.push_back(pr);
    chosen.push_back(c);
  }
  return chosen;
}

}  // namespace

std::vector<Covariant> isotypic_project(const CovariantSpace& space, const YoungPartition& lambda) {
  const auto p = isotypic_projector(space, lambda);
  std::vector<Covariant> out;
  for (std::size_t c : independent_columns(p)) {
    std::vector<GaussRat> col(p.size());
    for (std::size_t r = 0; r < p.size(); ++r) col[r] = p[r][c];
    out.push_back(space.row_combination(col));
  }
  return out;
}

Covariant isotypic_component_of(const CovariantSpace& space, const YoungPartition& lambda, const Covariant& c) {
  auto coords = space.row_coordinates(c.poly());
  if (!coords) throw Error(ErrorCode::InvalidArgument, "covariant is not in the space");
  const auto p = isotypic_projector(space, lambda);
  std::vector<GaussRat> v(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!p[r][k].is_zero() && !(*coords)[k].is_zero()) v[r] += p[r][k] * (*coords)[k];
    }
  }
  return space.row_combination(v);
}

}  // namespace taut
