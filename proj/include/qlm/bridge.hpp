#pragma once

namespace qlm {

enum class BridgeKind {
  // Quintic Hermite with vanishing second derivative at both ends.
  quintic,
  // Cubic Hermite; C^1 only, but still gives a C^2 conformal factor since
  // bridges enter u through u' = q(r) / r^2.
  cubic,
};

const char* to_string(BridgeKind kind);
BridgeKind bridge_kind_from_string(const char* name);

/// Hermite interpolant on [ra, rb] matching values (fa, fb) and slopes
/// (sa, sb) at the two ends. Construct through smooth_monotone_bridge() to
/// get the monotonicity guarantee.
class HermiteBridge {
 public:
  HermiteBridge() = default;
  HermiteBridge(BridgeKind kind, double ra, double rb, double fa, double fb,
                double sa, double sb);

  double value(double r) const;
  double slope(double r) const;
  double second(double r) const;

  double ra() const { return ra_; }
  double rb() const { return rb_; }
  double fa() const { return fa_; }
  double fb() const { return fb_; }
  double sa() const { return sa_; }
  double sb() const { return sb_; }
  BridgeKind kind() const { return kind_; }

 private:
  BridgeKind kind_ = BridgeKind::quintic;
  double ra_ = 0.0, rb_ = 1.0;
  double fa_ = 0.0, fb_ = 0.0;
  double sa_ = 0.0, sb_ = 0.0;
};

}  // namespace qlm
