#include "superosc/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace superosc {

template <class T>
CosineSignal<T>::CosineSignal(Vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  using std::isfinite;
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("signal needs band limit >= 1");
  }
  for (Eigen::Index m = 0; m < coeffs_.size(); ++m) {
    if (!isfinite(coeffs_(m))) {
      throw std::invalid_argument("signal coefficient " + std::to_string(m) +
                                  " is not finite");
    }
  }
}

template <class T>
CosineSignal<T> CosineSignal<T>::zero(int band_limit) {
  return CosineSignal(Vector<T>::Zero(band_limit + 1));
}

template <class T>
Vector<T> basis_values(int band_limit, const T& t) {
  using std::cos;
  using std::sqrt;
  const T root_pi = sqrt(pi<T>());
  Vector<T> row(band_limit + 1);
  row(0) = T(1) / (sqrt(T(2)) * root_pi);
  for (int m = 1; m <= band_limit; ++m) {
    row(m) = cos(T(m) * t) / root_pi;
  }
  return row;
}

template <class T>
T CosineSignal<T>::evaluate(const T& t) const {
  return basis_values<T>(band_limit(), t).dot(coeffs_);
}

template <class T>
T CosineSignal<T>::energy_per_period() const {
  return coeffs_.squaredNorm();
}

template <class T>
std::vector<std::pair<T, T>> CosineSignal<T>::sample(const T& lo, const T& hi,
                                                     int count) const {
  if (count < 2) {
    throw std::invalid_argument("sample count must be at least 2");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("sample range must satisfy lo < hi");
  }
  std::vector<std::pair<T, T>> out;
  out.reserve(static_cast<std::size_t>(count));
  const T step = (hi - lo) / T(count - 1);
  for (int k = 0; k < count; ++k) {
    const T t = k == count - 1 ? hi : lo + T(k) * step;
    out.emplace_back(t, evaluate(t));
  }
  return out;
}

template class CosineSignal<double>;
template class CosineSignal<HighPrecision>;
template Vector<double> basis_values<double>(int, const double&);
template Vector<HighPrecision> basis_values<HighPrecision>(int,
                                                           const HighPrecision&);

}  // namespace superosc
