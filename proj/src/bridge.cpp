#include "qlm/bridge.hpp"

#include <cstring>

#include "qlm/errors.hpp"

namespace qlm {

const char* to_string(BridgeKind kind) {
  switch (kind) {
    case BridgeKind::quintic:
      return "quintic";
    case BridgeKind::cubic:
      return "cubic";
  }
  return "unknown";
}

BridgeKind bridge_kind_from_string(const char* name) {
  if (std::strcmp(name, "quintic") == 0) return BridgeKind::quintic;
  if (std::strcmp(name, "cubic") == 0) return BridgeKind::cubic;
  throw InvalidParams(std::string("unknown bridge kind '") + name + "'");
}

namespace {

// Hermite basis on s in [0, 1]: value at 0, slope at 0, value at 1, slope
// at 1, together with first and second s-derivatives.
struct Basis {
  double v0, d0, v1, d1;
};

Basis quintic(double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  return {1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5,
          s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5,
          10.0 * s3 - 15.0 * s4 + 6.0 * s5,
          -4.0 * s3 + 7.0 * s4 - 3.0 * s5};
}

Basis quintic_ds(double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  return {-30.0 * s2 + 60.0 * s3 - 30.0 * s4,
          1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4,
          30.0 * s2 - 60.0 * s3 + 30.0 * s4,
          -12.0 * s2 + 28.0 * s3 - 15.0 * s4};
}

Basis quintic_ds2(double s) {
  const double s2 = s * s, s3 = s2 * s;
  return {-60.0 * s + 180.0 * s2 - 120.0 * s3,
          -36.0 * s + 96.0 * s2 - 60.0 * s3,
          60.0 * s - 180.0 * s2 + 120.0 * s3,
          -24.0 * s + 84.0 * s2 - 60.0 * s3};
}

Basis cubic(double s) {
  const double s2 = s * s, s3 = s2 * s;
  return {1.0 - 3.0 * s2 + 2.0 * s3, s - 2.0 * s2 + s3, 3.0 * s2 - 2.0 * s3,
          -s2 + s3};
}

Basis cubic_ds(double s) {
  const double s2 = s * s;
  return {-6.0 * s + 6.0 * s2, 1.0 - 4.0 * s + 3.0 * s2, 6.0 * s - 6.0 * s2,
          -2.0 * s + 3.0 * s2};
}

Basis cubic_ds2(double s) {
  return {-6.0 + 12.0 * s, -4.0 + 6.0 * s, 6.0 - 12.0 * s, -2.0 + 6.0 * s};
}

}  // namespace

HermiteBridge::HermiteBridge(BridgeKind kind, double ra, double rb, double fa,
                             double fb, double sa, double sb)
    : kind_(kind), ra_(ra), rb_(rb), fa_(fa), fb_(fb), sa_(sa), sb_(sb) {
  if (!(rb > ra)) throw InvalidParams("bridge interval must satisfy ra < rb");
}

double HermiteBridge::value(double r) const {
  const double len = rb_ - ra_;
  const double s = (r - ra_) / len;
  const Basis b = kind_ == BridgeKind::quintic ? quintic(s) : cubic(s);
  return fa_ * b.v0 + fb_ * b.v1 + len * (sa_ * b.d0 + sb_ * b.d1);
}

double HermiteBridge::slope(double r) const {
  const double len = rb_ - ra_;
  const double s = (r - ra_) / len;
  const Basis b = kind_ == BridgeKind::quintic ? quintic_ds(s) : cubic_ds(s);
  return (fa_ * b.v0 + fb_ * b.v1) / len + sa_ * b.d0 + sb_ * b.d1;
}

double HermiteBridge::second(double r) const {
  const double len = rb_ - ra_;
  const double s = (r - ra_) / len;
  const Basis b = kind_ == BridgeKind::quintic ? quintic_ds2(s) : cubic_ds2(s);
  return ((fa_ * b.v0 + fb_ * b.v1) / len + sa_ * b.d0 + sb_ * b.d1) / len;
}

}  // namespace qlm
