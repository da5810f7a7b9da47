#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <functional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

using Q = boost::rational<std::int64_t>;
using cd = std::complex<double>;

// Degrees live in N^k; group elements in Z^k use the same container.
using Degree = std::vector<int>;
using ZVec = std::vector<long long>;

enum class Errc {
  Parse,
  InvalidGraph,
  NotComposable,
  DegreeOutOfRange,
  RangeMismatch,
  NotMember,
  DimensionMismatch,
  NotSkewSymmetric,
  GraphMismatch,
  NotPiClosed,
  MarginTooLarge,
  NotExhaustive,
  ContainsVertex,
  NotHereditary,
  NotSaturated,
  SourceMismatch,
  UnsupportedGraphClass,
  VertexNotInHPer,
  CutoffTooSmall,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

namespace deg {
Degree zero(int k);
Degree unit(int k, int i);
Degree ones(int k);
Degree filled(int k, int v);
Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);
Degree add(const Degree& a, const Degree& b);
// Caller guarantees b <= a.
Degree sub(const Degree& a, const Degree& b);
bool leq(const Degree& a, const Degree& b);
bool is_zero(const Degree& a);
int total(const Degree& a);
// All n with 0 <= n <= bound, ordered by total length then lexicographically.
std::vector<Degree> box(const Degree& bound);
ZVec diff(const Degree& a, const Degree& b);
std::string str(const Degree& a);
}  // namespace deg

// Fractions of a full turn. Exact when both operands are exact, otherwise a double.
class Phase {
 public:
  Phase() = default;
  explicit Phase(Q q);
  static Phase real(double turns);

  bool exact() const { return exact_; }
  const Q& rational() const { return q_; }
  double turns() const;
  cd value() const;
  bool is_zero(double tol = 0.0) const;

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase scaled(long long n) const;
  bool operator==(const Phase& o) const;

  std::string str() const;
  static Phase parse(const std::string& s);

 private:
  bool exact_ = true;
  Q q_{0};
  double x_ = 0.0;
};

Q frac(const Q& q);
double frac(double x);
// Distance of x from the nearest integer.
double dist_to_int(double x);

// Rational parsing from "p/q" or an integer literal; throws Errc::Parse.
Q parse_rational(const std::string& s);

// Worker count from KGRAPH_CK_THREADS (default 1).
int ck_threads();
// Runs fn(i) for i in [0, n) on up to ck_threads() workers. fn must only touch slot i of
// any shared output, so results do not depend on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace kg
