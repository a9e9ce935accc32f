#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hardnet/error.hpp"

namespace hardnet {

template <typename T>
class Tensor;
template <typename T>
class Tape;

inline std::string shape_str(const std::vector<size_t>& s) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

namespace detail {

template <typename T>
struct Node {
  std::vector<size_t> shape;
  std::vector<T> value;
  std::vector<T> grad;  // empty until a backward pass (or a leaf) needs it
  bool requires_grad = false;
  bool leaf = false;

  size_t numel() const { return value.size(); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), T(0));
  }
  void free_grad() {
    grad.clear();
    grad.shrink_to_fit();
  }
};

template <typename T>
using RowMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// C = (or +=) A(m,k) * B(k,n), all row-major dense buffers.
template <typename T>
void gemm_nn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  Eigen::Map<const RowMat<T>> ma(a, m, k), mb(b, k, n);
  Eigen::Map<RowMat<T>> mc(c, m, n);
  if (acc)
    mc.noalias() += ma * mb;
  else
    mc.noalias() = ma * mb;
}

// C = (or +=) A(m,k) * B(n,k)^T
template <typename T>
void gemm_nt(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  Eigen::Map<const RowMat<T>> ma(a, m, k), mb(b, n, k);
  Eigen::Map<RowMat<T>> mc(c, m, n);
  if (acc)
    mc.noalias() += ma * mb.transpose();
  else
    mc.noalias() = ma * mb.transpose();
}

// C = (or +=) A(k,m)^T * B(k,n)
template <typename T>
void gemm_tn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  Eigen::Map<const RowMat<T>> ma(a, k, m), mb(b, k, n);
  Eigen::Map<RowMat<T>> mc(c, m, n);
  if (acc)
    mc.noalias() += ma.transpose() * mb;
  else
    mc.noalias() = ma.transpose() * mb;
}

}  // namespace detail

// Dense row-major tensor handle. Copies share the underlying buffer; the
// value is treated as immutable once the tensor has entered an operation,
// only the grad slot mutates afterwards.
template <typename T>
class Tensor {
 public:
  using Node = detail::Node<T>;

  Tensor() = default;

  static Tensor zeros(std::vector<size_t> shape) {
    return with_value(std::move(shape), T(0));
  }
  static Tensor full(std::vector<size_t> shape, T v) {
    return with_value(std::move(shape), v);
  }
  static Tensor scalar(T v) {
    auto t = with_value({1}, v);
    return t;
  }
  static Tensor from_data(std::vector<size_t> shape, std::vector<T> data) {
    size_t n = 1;
    for (size_t d : shape) n *= d;
    if (n != data.size())
      throw ShapeError("from_data: shape " + shape_str(shape) + " needs " + std::to_string(n) +
                       " values, got " + std::to_string(data.size()));
    auto t = Tensor();
    t.node_ = std::make_shared<Node>();
    t.node_->shape = std::move(shape);
    t.node_->value = std::move(data);
    return t;
  }

  bool defined() const { return node_ != nullptr; }
  const std::vector<size_t>& shape() const { return node_->shape; }
  size_t rank() const { return node_->shape.size(); }
  size_t dim(size_t i) const { return node_->shape[i]; }
  size_t numel() const { return node_->numel(); }

  const T* data() const { return node_->value.data(); }
  T* data() { return node_->value.data(); }
  const std::vector<T>& values() const { return node_->value; }

  T item() const {
    if (numel() != 1)
      throw ContractError("item: tensor has shape " + shape_str(shape()) + ", expected a scalar");
    return node_->value[0];
  }

  bool requires_grad() const { return node_ && node_->requires_grad; }

  // Marks this tensor as a gradient leaf. Leaves keep their grad buffer
  // after backward; a leaf never touched by the graph reads as all zeros.
  Tensor& set_requires_grad(bool on = true) {
    node_->requires_grad = on;
    node_->leaf = on;
    if (on)
      node_->ensure_grad();
    else
      node_->free_grad();
    return *this;
  }

  const std::vector<T>& grad() const {
    if (!requires_grad()) throw ContractError("grad: tensor does not track gradients");
    node_->ensure_grad();
    return node_->grad;
  }

  void zero_grad() {
    if (!node_->grad.empty()) std::fill(node_->grad.begin(), node_->grad.end(), T(0));
  }

  const std::shared_ptr<Node>& impl() const { return node_; }

 private:
  static Tensor with_value(std::vector<size_t> shape, T v) {
    auto t = Tensor();
    t.node_ = std::make_shared<Node>();
    size_t n = 1;
    for (size_t d : shape) n *= d;
    t.node_->shape = std::move(shape);
    t.node_->value.assign(n, v);
    return t;
  }

  std::shared_ptr<Node> node_;
};

// Ordered record of applied operations. Backward replays it once, in
// reverse application order. One tape per logical thread; tapes nest.
template <typename T>
class Tape {
 public:
  Tape() : prev_(active_ref()) { active_ref() = this; }
  ~Tape() { active_ref() = prev_; }
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  static Tape* active() { return active_ref(); }

  void record(std::shared_ptr<detail::Node<T>> out, std::function<void()> backprop) {
    out->requires_grad = true;
    entries_.push_back(Entry{std::move(out), std::move(backprop)});
  }

  size_t size() const { return entries_.size(); }

  // Seeds d(root)/d(root) = 1 and accumulates into every reachable leaf.
  void backward(const Tensor<T>& root) {
    if (root.numel() != 1)
      throw ContractError("backward: root must be scalar, got shape " + shape_str(root.shape()));
    if (!root.requires_grad())
      throw ContractError("backward: root does not track gradients (no grad-enabled inputs)");
    if (consumed_) throw ContractError("backward: tape already consumed");
    consumed_ = true;
    auto& rn = *root.impl();
    rn.ensure_grad();
    rn.grad[0] += T(1);
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it->out->grad.empty()) continue;  // not on the path from the root
      it->backprop();
      if (!it->out->leaf) it->out->free_grad();
    }
  }

 private:
  struct Entry {
    std::shared_ptr<detail::Node<T>> out;
    std::function<void()> backprop;
  };

  static Tape*& active_ref() {
    static thread_local Tape* active = nullptr;
    return active;
  }

  std::vector<Entry> entries_;
  Tape* prev_;
  bool consumed_ = false;
};

namespace detail {

template <typename T>
bool want_grad(std::initializer_list<const Tensor<T>*> inputs) {
  if (!Tape<T>::active()) return false;
  for (const auto* t : inputs)
    if (t->requires_grad()) return true;
  return false;
}

template <typename T>
void accumulate(Node<T>& n, const std::vector<T>& g) {
  n.ensure_grad();
  for (size_t i = 0; i < g.size(); ++i) n.grad[i] += g[i];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// unary elementwise

template <typename T, typename Fwd, typename Bwd>
Tensor<T> unary_elementwise(const Tensor<T>& x, Fwd fwd, Bwd dfdx_from_xy) {
  const size_t n = x.numel();
  std::vector<T> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = fwd(x.data()[i]);
  auto y = Tensor<T>::from_data(x.shape(), std::move(out));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn, dfdx_from_xy]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      for (size_t i = 0; i < xn->value.size(); ++i)
        xn->grad[i] += yn->grad[i] * dfdx_from_xy(xn->value[i], yn->value[i]);
    });
  }
  return y;
}

template <typename T>
Tensor<T> relu(const Tensor<T>& x) {
  // subgradient 0 at exactly 0
  return unary_elementwise(
      x, [](T v) { return v > T(0) ? v : T(0); },
      [](T v, T) { return v > T(0) ? T(1) : T(0); });
}

template <typename T>
Tensor<T> sqrt(const Tensor<T>& x) {
  for (size_t i = 0; i < x.numel(); ++i)
    if (x.data()[i] < T(0))
      throw DomainError("sqrt: negative input " + std::to_string(x.data()[i]) + " at index " +
                        std::to_string(i));
  return unary_elementwise(
      x, [](T v) { return std::sqrt(v); },
      [](T, T y) { return y > T(0) ? T(1) / (T(2) * y) : T(0); });
}

template <typename T>
Tensor<T> exp(const Tensor<T>& x) {
  return unary_elementwise(
      x, [](T v) { return std::exp(v); }, [](T, T y) { return y; });
}

template <typename T>
Tensor<T> log(const Tensor<T>& x) {
  for (size_t i = 0; i < x.numel(); ++i)
    if (x.data()[i] <= T(0))
      throw DomainError("log: non-positive input " + std::to_string(x.data()[i]) + " at index " +
                        std::to_string(i));
  return unary_elementwise(
      x, [](T v) { return std::log(v); }, [](T v, T) { return T(1) / v; });
}

template <typename T>
Tensor<T> neg(const Tensor<T>& x) {
  return unary_elementwise(
      x, [](T v) { return -v; }, [](T, T) { return T(-1); });
}

template <typename T>
Tensor<T> clamp(const Tensor<T>& x, T lo, T hi) {
  // gradient passes on the closed interval [lo, hi]
  return unary_elementwise(
      x, [lo, hi](T v) { return std::min(std::max(v, lo), hi); },
      [lo, hi](T v, T) { return (v >= lo && v <= hi) ? T(1) : T(0); });
}

// ---------------------------------------------------------------------------
// binary elementwise: identical shapes, or one operand a scalar

namespace detail {

enum class Broadcast { none, left_scalar, right_scalar };

template <typename T>
Broadcast broadcast_kind(const Tensor<T>& a, const Tensor<T>& b, const char* op) {
  if (a.shape() == b.shape()) return Broadcast::none;
  if (a.numel() == 1) return Broadcast::left_scalar;
  if (b.numel() == 1) return Broadcast::right_scalar;
  throw ShapeError(std::string(op) + ": incompatible shapes " + shape_str(a.shape()) + " vs " +
                   shape_str(b.shape()));
}

}  // namespace detail

template <typename T, typename Fwd, typename DA, typename DB>
Tensor<T> binary_elementwise(const Tensor<T>& a, const Tensor<T>& b, const char* name, Fwd fwd,
                             DA dfda, DB dfdb) {
  const auto kind = detail::broadcast_kind(a, b, name);
  const size_t n = std::max(a.numel(), b.numel());
  const auto& shape =
      (kind == detail::Broadcast::left_scalar) ? b.shape() : a.shape();
  std::vector<T> out(n);
  const T* pa = a.data();
  const T* pb = b.data();
  const size_t sa = (kind == detail::Broadcast::left_scalar) ? 0 : 1;
  const size_t sb = (kind == detail::Broadcast::right_scalar) ? 0 : 1;
  for (size_t i = 0; i < n; ++i) out[i] = fwd(pa[i * sa], pb[i * sb]);
  auto y = Tensor<T>::from_data(shape, std::move(out));
  if (detail::want_grad<T>({&a, &b})) {
    auto an = a.impl();
    auto bn = b.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [an, bn, yn, sa, sb, n, dfda, dfdb]() {
      if (an->requires_grad) {
        an->ensure_grad();
        for (size_t i = 0; i < n; ++i)
          an->grad[i * sa] += yn->grad[i] * dfda(an->value[i * sa], bn->value[i * sb]);
      }
      if (bn->requires_grad) {
        bn->ensure_grad();
        for (size_t i = 0; i < n; ++i)
          bn->grad[i * sb] += yn->grad[i] * dfdb(an->value[i * sa], bn->value[i * sb]);
      }
    });
  }
  return y;
}

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  return binary_elementwise(
      a, b, "add", [](T x, T y) { return x + y; }, [](T, T) { return T(1); },
      [](T, T) { return T(1); });
}

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
  return binary_elementwise(
      a, b, "sub", [](T x, T y) { return x - y; }, [](T, T) { return T(1); },
      [](T, T) { return T(-1); });
}

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
  return binary_elementwise(
      a, b, "mul", [](T x, T y) { return x * y; }, [](T, T y) { return y; },
      [](T x, T) { return x; });
}

template <typename T>
Tensor<T> div(const Tensor<T>& a, const Tensor<T>& b) {
  return binary_elementwise(
      a, b, "div", [](T x, T y) { return x / y; }, [](T, T y) { return T(1) / y; },
      [](T x, T y) { return -x / (y * y); });
}

template <typename T>
Tensor<T> operator+(const Tensor<T>& a, const Tensor<T>& b) {
  return add(a, b);
}
template <typename T>
Tensor<T> operator-(const Tensor<T>& a, const Tensor<T>& b) {
  return sub(a, b);
}
template <typename T>
Tensor<T> operator*(const Tensor<T>& a, const Tensor<T>& b) {
  return mul(a, b);
}
template <typename T>
Tensor<T> operator+(const Tensor<T>& a, T s) {
  return add(a, Tensor<T>::scalar(s));
}
template <typename T>
Tensor<T> operator-(const Tensor<T>& a, T s) {
  return sub(a, Tensor<T>::scalar(s));
}
template <typename T>
Tensor<T> operator-(T s, const Tensor<T>& a) {
  return sub(Tensor<T>::scalar(s), a);
}
template <typename T>
Tensor<T> operator*(T s, const Tensor<T>& a) {
  return mul(Tensor<T>::scalar(s), a);
}

// ---------------------------------------------------------------------------
// matmul (2-D)

template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.rank() != 2 || b.rank() != 2 || a.dim(1) != b.dim(0))
    throw ShapeError("matmul: incompatible shapes " + shape_str(a.shape()) + " vs " +
                     shape_str(b.shape()));
  const size_t m = a.dim(0), k = a.dim(1), n = b.dim(1);
  std::vector<T> out(m * n);
  detail::gemm_nn(a.data(), b.data(), out.data(), m, k, n, false);
  auto y = Tensor<T>::from_data({m, n}, std::move(out));
  if (detail::want_grad<T>({&a, &b})) {
    auto an = a.impl();
    auto bn = b.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [an, bn, yn, m, k, n]() {
      if (an->requires_grad) {
        an->ensure_grad();
        detail::gemm_nt(yn->grad.data(), bn->value.data(), an->grad.data(), m, n, k, true);
      }
      if (bn->requires_grad) {
        bn->ensure_grad();
        detail::gemm_tn(an->value.data(), yn->grad.data(), bn->grad.data(), k, m, n, true);
      }
    });
  }
  return y;
}

// ---------------------------------------------------------------------------
// shape plumbing

template <typename T>
Tensor<T> reshape(const Tensor<T>& x, std::vector<size_t> shape) {
  size_t n = 1;
  for (size_t d : shape) n *= d;
  if (n != x.numel())
    throw ShapeError("reshape: cannot view " + shape_str(x.shape()) + " as " + shape_str(shape));
  auto y = Tensor<T>::from_data(std::move(shape), std::vector<T>(x.values()));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn]() {
      if (xn->requires_grad) detail::accumulate(*xn, yn->grad);
    });
  }
  return y;
}

template <typename T>
Tensor<T> transpose(const Tensor<T>& x) {
  if (x.rank() != 2) throw ShapeError("transpose: expected rank 2, got " + shape_str(x.shape()));
  const size_t r = x.dim(0), c = x.dim(1);
  std::vector<T> out(r * c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) out[j * r + i] = x.data()[i * c + j];
  auto y = Tensor<T>::from_data({c, r}, std::move(out));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn, r, c]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) xn->grad[i * c + j] += yn->grad[j * r + i];
    });
  }
  return y;
}

// Gather by flat offsets into a 1-D tensor. Backward scatter-adds.
template <typename T>
Tensor<T> take(const Tensor<T>& x, std::vector<size_t> indices) {
  for (size_t idx : indices)
    if (idx >= x.numel())
      throw ContractError("take: index " + std::to_string(idx) + " out of range for " +
                          std::to_string(x.numel()) + " elements");
  std::vector<T> out(indices.size());
  for (size_t i = 0; i < indices.size(); ++i) out[i] = x.data()[indices[i]];
  auto y = Tensor<T>::from_data({indices.size()}, std::move(out));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn, idx = std::move(indices)]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      for (size_t i = 0; i < idx.size(); ++i) xn->grad[idx[i]] += yn->grad[i];
    });
  }
  return y;
}

// Contiguous slice along the first axis: rows [begin, end).
template <typename T>
Tensor<T> slice_rows(const Tensor<T>& x, size_t begin, size_t end) {
  if (x.rank() < 1 || begin > end || end > x.dim(0))
    throw ShapeError("slice_rows: [" + std::to_string(begin) + "," + std::to_string(end) +
                     ") invalid for shape " + shape_str(x.shape()));
  size_t row = x.numel() / std::max<size_t>(x.dim(0), 1);
  std::vector<size_t> shape = x.shape();
  shape[0] = end - begin;
  std::vector<T> out(x.data() + begin * row, x.data() + end * row);
  auto y = Tensor<T>::from_data(std::move(shape), std::move(out));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn, begin, row]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      for (size_t i = 0; i < yn->grad.size(); ++i) xn->grad[begin * row + i] += yn->grad[i];
    });
  }
  return y;
}

// ---------------------------------------------------------------------------
// reductions

namespace detail {

// Iteration geometry for reducing one axis of a row-major tensor.
struct AxisGeom {
  size_t outer = 1, len = 1, inner = 1;
};

inline AxisGeom axis_geom(const std::vector<size_t>& shape, size_t axis) {
  AxisGeom g;
  for (size_t i = 0; i < axis; ++i) g.outer *= shape[i];
  g.len = shape[axis];
  for (size_t i = axis + 1; i < shape.size(); ++i) g.inner *= shape[i];
  return g;
}

}  // namespace detail

template <typename T>
Tensor<T> sum(const Tensor<T>& x) {
  if (x.numel() == 0) throw ContractError("sum: empty input");
  T acc = 0;
  for (size_t i = 0; i < x.numel(); ++i) acc += x.data()[i];
  auto y = Tensor<T>::scalar(acc);
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      const T g = yn->grad[0];
      for (auto& v : xn->grad) v += g;
    });
  }
  return y;
}

template <typename T>
Tensor<T> mean(const Tensor<T>& x) {
  if (x.numel() == 0) throw ContractError("mean: empty input");
  const T inv = T(1) / static_cast<T>(x.numel());
  return mul(sum(x), Tensor<T>::scalar(inv));
}

template <typename T>
Tensor<T> sum(const Tensor<T>& x, size_t axis) {
  if (axis >= x.rank())
    throw ContractError("sum: axis " + std::to_string(axis) + " out of range for " +
                        shape_str(x.shape()));
  if (x.dim(axis) == 0) throw ContractError("sum: empty reduction axis");
  const auto g = detail::axis_geom(x.shape(), axis);
  std::vector<size_t> shape;
  for (size_t i = 0; i < x.rank(); ++i)
    if (i != axis) shape.push_back(x.dim(i));
  if (shape.empty()) shape.push_back(1);
  std::vector<T> out(g.outer * g.inner, T(0));
  for (size_t o = 0; o < g.outer; ++o)
    for (size_t l = 0; l < g.len; ++l) {
      const T* src = x.data() + (o * g.len + l) * g.inner;
      T* dst = out.data() + o * g.inner;
      for (size_t i = 0; i < g.inner; ++i) dst[i] += src[i];
    }
  auto y = Tensor<T>::from_data(std::move(shape), std::move(out));
  if (detail::want_grad<T>({&x})) {
    auto xn = x.impl();
    auto yn = y.impl();
    Tape<T>::active()->record(yn, [xn, yn, g]() {
      if (!xn->requires_grad) return;
      xn->ensure_grad();
      for (size_t o = 0; o < g.outer; ++o)
        for (size_t l = 0; l < g.len; ++l) {
          T* dst = xn->grad.data() + (o * g.len + l) * g.inner;
          const T* src = yn->grad.data() + o * g.inner;
          for (size_t i = 0; i < g.inner; ++i) dst[i] += src[i];
        }
    });
  }
  return y;
}

template <typename T>
Tensor<T> mean(const Tensor<T>& x, size_t axis) {
  if (axis >= x.rank())
    throw ContractError("mean: axis " + std::to_string(axis) + " out of range for " +
                        shape_str(x.shape()));
  const T inv = T(1) / static_cast<T>(x.dim(axis));
  return mul(sum(x, axis), Tensor<T>::scalar(inv));
}

// Result of an arg-reduction: reduced values plus first-occurrence winner
// positions (flat index for the whole-tensor form, offset along the axis
// for the per-axis form). Gradient routes to the winners.
template <typename T>
struct ArgReduce {
  Tensor<T> values;
  std::vector<size_t> indices;
};

namespace detail {

template <typename T, typename Better>
ArgReduce<T> arg_reduce_all(const Tensor<T>& x, Better better) {
  if (x.numel() == 0) throw ContractError("arg reduce: empty input");
  size_t win = 0;
  for (size_t i = 1; i < x.numel(); ++i)
    if (better(x.data()[i], x.data()[win])) win = i;
  auto y = take(x, std::vector<size_t>{win});
  return ArgReduce<T>{std::move(y), {win}};
}

template <typename T, typename Better>
ArgReduce<T> arg_reduce_axis(const Tensor<T>& x, size_t axis, Better better) {
  if (axis >= x.rank())
    throw ContractError("arg reduce: axis " + std::to_string(axis) + " out of range for " +
                        shape_str(x.shape()));
  if (x.dim(axis) == 0) throw ContractError("arg reduce: empty reduction axis");
  const auto g = axis_geom(x.shape(), axis);
  std::vector<size_t> winners(g.outer * g.inner);
  std::vector<size_t> flat(g.outer * g.inner);
  for (size_t o = 0; o < g.outer; ++o)
    for (size_t i = 0; i < g.inner; ++i) {
      size_t win = 0;
      T best = x.data()[o * g.len * g.inner + i];
      for (size_t l = 1; l < g.len; ++l) {
        T v = x.data()[(o * g.len + l) * g.inner + i];
        if (better(v, best)) {
          best = v;
          win = l;
        }
      }
      winners[o * g.inner + i] = win;
      flat[o * g.inner + i] = (o * g.len + win) * g.inner + i;
    }
  auto values = take(x, flat);
  std::vector<size_t> shape;
  for (size_t i = 0; i < x.rank(); ++i)
    if (i != axis) shape.push_back(x.dim(i));
  if (shape.empty()) shape.push_back(1);
  values = reshape(values, shape);
  return ArgReduce<T>{std::move(values), std::move(winners)};
}

}  // namespace detail

template <typename T>
ArgReduce<T> min_with_index(const Tensor<T>& x) {
  return detail::arg_reduce_all(x, [](T a, T b) { return a < b; });
}
template <typename T>
ArgReduce<T> max_with_index(const Tensor<T>& x) {
  return detail::arg_reduce_all(x, [](T a, T b) { return a > b; });
}
template <typename T>
ArgReduce<T> min_with_index(const Tensor<T>& x, size_t axis) {
  return detail::arg_reduce_axis(x, axis, [](T a, T b) { return a < b; });
}
template <typename T>
ArgReduce<T> max_with_index(const Tensor<T>& x, size_t axis) {
  return detail::arg_reduce_axis(x, axis, [](T a, T b) { return a > b; });
}

}  // namespace hardnet
