#include "fmq/matrix.hpp"

namespace fmq {

RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

bool is_integral(const RatMat& m) { return is_integral(m.entries()); }

IntMat to_int(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int(m(i, j));
  return out;
}

namespace {

template <class T>
std::string format(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).get_str();
    }
  }
  return out + "]";
}

}  // namespace

std::string to_string(const IntMat& m) { return format(m); }
std::string to_string(const RatMat& m) { return format(m); }

}  // namespace fmq
