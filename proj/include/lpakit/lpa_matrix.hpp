#pragma once

#include "lpakit/path_algebra.hpp"

#include <json.hpp>

namespace lpakit {

/// Rectangular matrix over L(E) or C(E); all entries share one context.
template <typename S>
class LpaMatrix {
 public:
  LpaMatrix(Context ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Element<S>(ctx_)) {}

  static LpaMatrix identity(const Context& ctx, std::size_t n) {
    LpaMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Element<S>::unit(ctx);
    return m;
  }
  static LpaMatrix diagonal(const Context& ctx, const std::vector<Element<S>>& d) {
    LpaMatrix m(ctx, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  const Context& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element<S>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element<S>& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Entrywise image under f, landing in context `target`.
  template <typename F>
  LpaMatrix map(const Context& target, F f) const {
    LpaMatrix out(target, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
    return out;
  }

  friend bool operator==(const LpaMatrix& a, const LpaMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Context ctx_;
  std::size_t rows_, cols_;
  std::vector<Element<S>> entries_;
};

template <typename S>
LpaMatrix<S> mat_mul(const LpaMatrix<S>& a, const LpaMatrix<S>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  LpaMatrix<S> out(a.context(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename S>
LpaMatrix<S> mat_add(const LpaMatrix<S>& a, const LpaMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch in sum");
  LpaMatrix<S> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

template <typename S>
LpaMatrix<S> mat_sub(const LpaMatrix<S>& a, const LpaMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch in difference");
  LpaMatrix<S> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

/// Transpose combined with the involution.
template <typename S>
LpaMatrix<S> star_transpose(const LpaMatrix<S>& a) {
  LpaMatrix<S> out(a.context(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).star();
  return out;
}

template <typename S>
bool is_identity(const LpaMatrix<S>& a) {
  if (a.rows() != a.cols()) return false;
  const auto one = Element<S>::unit(a.context());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == (i == j ? one : Element<S>(a.context())))) return false;
  return true;
}

template <typename S>
nlohmann::json to_json(const LpaMatrix<S>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lpakit
