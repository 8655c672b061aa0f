#include "dimspec/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>

#include "dimspec/errors.hpp"

namespace dimspec {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless-laplacian";
  }
  return "unknown";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "a" || lower == "adjacency") return MatrixKind::Adjacency;
  if (lower == "l" || lower == "laplacian") return MatrixKind::Laplacian;
  if (lower == "q" || lower == "signless" || lower == "signless-laplacian") {
    return MatrixKind::SignlessLaplacian;
  }
  return std::nullopt;
}

SymMatrix::SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

SymMatrix::SymMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), data_(std::move(entries)) {
  if (data_.size() != order_ * order_) throw InputError("matrix entry count does not match order");
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw InputError("matrix is not symmetric");
    }
  }
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * order_ + j] = value;
  data_[j * order_ + i] = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < order_; ++j) acc += data_[i * order_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

SymMatrix matrix(const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  SymMatrix m(n);
  const double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
  for (const Edge& e : g.edges()) m.set(e.u - 1, e.v - 1, off);
  if (kind != MatrixKind::Adjacency) {
    for (Vertex v = 1; v <= g.order(); ++v) m.set(v - 1, v - 1, g.degree(v));
  }
  return m;
}

bool is_irreducible(const SymMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !seen[j] && m(i, j) != 0.0) {
        seen[j] = 1;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n;
}

}  // namespace dimspec
