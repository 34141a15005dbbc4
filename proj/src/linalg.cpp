#include "tracecodes/linalg.hpp"

#include <utility>

#include "tracecodes/errors.hpp"

namespace tracecodes {

std::vector<Residue> Matrix::column(std::size_t c) const {
  std::vector<Residue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Residue inverse_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw InvalidArgument("inverse of zero mod p");
  std::uint64_t result = 1, base = a;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

namespace {

// Reduces `m` to row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, Residue p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(r, k));
    }
    const std::uint64_t scale = inverse_mod(m.at(r, c), p);
    for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = static_cast<Residue>(m.at(r, k) * scale % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const std::uint64_t f = m.at(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m.at(i, k) = static_cast<Residue>((m.at(i, k) + (p - f) * m.at(r, k)) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(Matrix m, Residue p) { return echelon(m, p).size(); }

std::optional<std::vector<Residue>> solve_combination(const std::vector<std::vector<Residue>>& columns,
                                                      std::span<const Residue> target, Residue p) {
  const std::size_t rows = target.size();
  const std::size_t unknowns = columns.size();
  Matrix aug(rows, unknowns + 1);
  for (std::size_t j = 0; j < unknowns; ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) aug.at(i, j) = columns[j][i] % p;
  }
  for (std::size_t i = 0; i < rows; ++i) aug.at(i, unknowns) = target[i] % p;
  const auto pivots = echelon(aug, p);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  std::vector<Residue> x(unknowns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, unknowns);
  return x;
}

std::vector<Residue> row_times_matrix(std::span<const Residue> u, const Matrix& g, Residue p) {
  if (u.size() != g.rows()) throw InvalidArgument("row vector length does not match matrix");
  std::vector<std::uint64_t> acc(g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (u[r] % p == 0) continue;
    const auto row = g.row(r);
    for (std::size_t c = 0; c < g.cols(); ++c) acc[c] = (acc[c] + std::uint64_t{u[r] % p} * row[c]) % p;
  }
  return {acc.begin(), acc.end()};
}

bool is_scalar_multiple(std::span<const Residue> y, std::span<const Residue> x, Residue p) {
  if (x.size() != y.size()) return false;
  std::size_t lead = 0;
  while (lead < x.size() && x[lead] == 0) ++lead;
  if (lead == x.size()) return false;
  if (y[lead] == 0) return false;
  const std::uint64_t lambda = std::uint64_t{y[lead]} * inverse_mod(x[lead], p) % p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (lambda * x[i] % p != y[i]) return false;
  }
  return true;
}

}  // namespace tracecodes
