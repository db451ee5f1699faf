#ifndef AMALGAM_WEIGHTS_HPP
#define AMALGAM_WEIGHTS_HPP

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

// A submultiplicative weight bounded below by 1. Instances are immutable
// and validated at construction; anything that circulates is a valid weight.
//
// Built-in families:
//   polynomial(s):  (1 + |x|)^s,           s >= 0
//   exponential(a): e^{a |x|},             a >= 0
//   product(ws):    pointwise product of valid weights
//   tabulated:      linear interpolation of sampled values (>= 1), evaluation
//                   outside the table is an error rather than an extrapolation
class Weight {
 public:
  enum class Family { polynomial, exponential, product, tabulated };

  static Weight polynomial(double power);
  static Weight exponential(double rate);
  static Weight product(std::vector<Weight> factors);
  static Weight tabulated(std::vector<double> xs, std::vector<double> vs);

  // Unit weight (1+|x|)^0; convenient default.
  Weight() : Weight(polynomial(0.0)) {}

  double operator()(double x) const;
  Eigen::ArrayXd operator()(const Eigen::ArrayXd& xs) const;

  Family family() const { return family_; }
  double power() const { return power_; }  // polynomial only
  double rate() const { return rate_; }    // exponential only
  const std::vector<Weight>& factors() const { return *factors_; }
  const std::vector<double>& table_xs() const { return *table_xs_; }
  const std::vector<double>& table_vs() const { return *table_vs_; }

  // Canonical (power, rate) pair such that the weight equals
  // (1+|x|)^power * e^{rate |x|}; empty for tabulated content.
  std::optional<std::pair<double, double>> closed_form() const;

  std::string describe() const;

 private:
  Weight(Family f) : family_(f) {}
  void validate() const;

  Family family_;
  double power_ = 0.0;
  double rate_ = 0.0;
  std::shared_ptr<const std::vector<Weight>> factors_;
  std::shared_ptr<const std::vector<double>> table_xs_;
  std::shared_ptr<const std::vector<double>> table_vs_;
};

struct DominanceVerdict {
  bool holds = false;
  double constant = 0.0;  // least C found on the probe set when holds
  double witness = 0.0;   // probe maximizing the ratio when it fails
  int probe_count = 0;
};

struct SubmultReport {
  double max_ratio = 0.0;
  bool pass = false;
};

enum class SeriesVerdict { converges, diverges, inconclusive };

struct BdReport {
  double partial_sum = 0.0;
  SeriesVerdict verdict = SeriesVerdict::inconclusive;
  long terms_used = 0;
};

// max over probes of w(x+y) / (w(x) w(y)); pass iff <= 1 + 1e-12.
SubmultReport check_submultiplicative(
    const Weight& w, std::span<const std::pair<double, double>> probes);

// Tests w1 <= C w2 on the probe set (ceiling bounds the accepted C). For
// closed-form pairs an analytic fast path decides exactly and the probe set
// only instruments the verdict.
DominanceVerdict dominates(const Weight& w1, const Weight& w2,
                           std::span<const double> probes, double ceiling);

// Convenience overload with the default probe sweep and ceiling 1e6.
DominanceVerdict dominates(const Weight& w1, const Weight& w2);

bool equivalent(const Weight& w1, const Weight& w2,
                std::span<const double> probes, double ceiling);
bool equivalent(const Weight& w1, const Weight& w2);

// Partial sum of log w(n x) / n^2 for n = 1..n_max, with the analytic
// verdict for closed-form families (polynomial part converges, any positive
// exponential rate diverges); tabulated weights report inconclusive.
BdReport bd_condition(const Weight& w, double x, long n_max);

// The probe sweep used by the convenience overloads: 0, +-(1/8)..+-1024,
// roughly geometric.
const std::vector<double>& default_probes();

inline constexpr double kDominanceCeiling = 1e6;

}  // namespace amalgam

#endif
