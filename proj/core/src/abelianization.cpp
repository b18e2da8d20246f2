#include "sqmodel/abelianization.hpp"

#include <algorithm>
#include <sstream>

namespace sqm {

RelationMatrix relation_matrix(const Presentation& p) {
  RelationMatrix m;
  m.rows = p.relators.size();
  m.cols = p.n;
  m.entries.assign(m.rows * m.cols, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const Letter l : p.relators[r].letters)
      m.at(r, static_cast<std::size_t>(l.generator() - 1)) += l.sign();
  return m;
}

namespace {

using Row = std::vector<mpz_class>;

// Folds `row` into the echelon basis by Euclidean row operations; basis[c]
// holds the row whose leading entry sits in column c.
void accumulate_row(std::vector<Row>& basis, Row row) {
  const std::size_t cols = row.size();
  for (std::size_t c = 0; c < cols; ++c) {
    if (row[c] == 0) continue;
    Row& b = basis[c];
    if (b.empty()) {
      if (row[c] < 0)
        for (auto& v : row) v = -v;
      b = std::move(row);
      return;
    }
    while (row[c] != 0) {
      const mpz_class q = b[c] / row[c];
      for (std::size_t j = c; j < cols; ++j) b[j] -= q * row[j];
      std::swap(b, row);
    }
  }
}

// Classic Smith reduction on a dense working matrix (at most cols x cols
// after accumulation), with the divisibility fix-up.
std::vector<mpz_class> smith_diagonal(std::vector<Row> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<mpz_class> diag;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate the minimal nonzero entry of the trailing submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        mpz_class a = abs(m[i][j]);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;

    std::swap(m[t], m[pi]);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows && clean; ++i) {
      if (m[i][t] == 0) continue;
      const mpz_class q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;  // remainder became the new minimum
    }
    if (!clean) continue;
    for (std::size_t j = t + 1; j < cols && clean; ++j) {
      if (m[t][j] == 0) continue;
      const mpz_class q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Divisibility fix-up: the pivot must divide every remaining entry.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
        }
    if (!divides) continue;

    if (m[t][t] < 0) m[t][t] = -m[t][t];
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const RelationMatrix& m) {
  std::vector<Row> basis(m.cols);
  Row row(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
    accumulate_row(basis, row);
    row.assign(m.cols, 0);
  }
  std::vector<Row> compact;
  for (Row& b : basis)
    if (!b.empty()) compact.push_back(std::move(b));

  std::vector<mpz_class> diag = smith_diagonal(std::move(compact));
  diag.resize(std::min(m.rows, m.cols), mpz_class(0));
  return diag;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const std::vector<mpz_class> diag = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::int64_t nonzero = 0;
  for (const mpz_class& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = static_cast<std::int64_t>(p.n) - nonzero;
  return inv;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const mpz_class& d : torsion) {
    if (!first) os << " x ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sqm
