#include "kgraph/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <mutex>
#include <thread>

namespace kg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::NotComposable: return "NotComposable";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::RangeMismatch: return "RangeMismatch";
    case Errc::NotMember: return "NotMember";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::NotPiClosed: return "NotPiClosed";
    case Errc::MarginTooLarge: return "MarginTooLarge";
    case Errc::NotExhaustive: return "NotExhaustive";
    case Errc::ContainsVertex: return "ContainsVertex";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::UnsupportedGraphClass: return "UnsupportedGraphClass";
    case Errc::VertexNotInHPer: return "VertexNotInHPer";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
  }
  return "Error";
}

namespace deg {

Degree zero(int k) { return Degree(k, 0); }

Degree unit(int k, int i) {
  Degree d(k, 0);
  d[i] = 1;
  return d;
}

Degree ones(int k) { return Degree(k, 1); }

Degree filled(int k, int v) { return Degree(k, v); }

Degree join(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Degree meet(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Degree add(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Degree sub(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool leq(const Degree& a, const Degree& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_zero(const Degree& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int total(const Degree& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

std::vector<Degree> box(const Degree& bound) {
  std::vector<Degree> out;
  Degree cur(bound.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return out;
}

ZVec diff(const Degree& a, const Degree& b) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (long long)a[i] - b[i];
  return r;
}

std::string str(const Degree& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

}  // namespace deg

Q frac(const Q& q) {
  auto n = q.numerator(), d = q.denominator();
  auto r = n % d;
  if (r < 0) r += d;
  return Q(r, d);
}

double frac(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;
  return r;
}

double dist_to_int(double x) { return std::abs(x - std::round(x)); }

Phase::Phase(Q q) : exact_(true), q_(frac(q)) {}

Phase Phase::real(double turns) {
  Phase p;
  p.exact_ = false;
  p.x_ = frac(turns);
  return p;
}

double Phase::turns() const {
  return exact_ ? double(q_.numerator()) / double(q_.denominator()) : x_;
}

cd Phase::value() const {
  if (exact_) {
    // Quarter turns come out exact; saves noise in the most common tests.
    auto d = q_.denominator(), n = q_.numerator();
    if (n == 0) return {1.0, 0.0};
    if (d == 2) return {-1.0, 0.0};
    if (d == 4) return n == 1 ? cd{0.0, 1.0} : cd{0.0, -1.0};
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * turns());
}

bool Phase::is_zero(double tol) const {
  if (exact_) return q_.numerator() == 0;
  return dist_to_int(x_) <= tol;
}

Phase Phase::operator+(const Phase& o) const {
  if (exact_ && o.exact_) return Phase(q_ + o.q_);
  return real(turns() + o.turns());
}

Phase Phase::operator-(const Phase& o) const {
  if (exact_ && o.exact_) return Phase(q_ - o.q_);
  return real(turns() - o.turns());
}

Phase Phase::operator-() const { return exact_ ? Phase(-q_) : real(-x_); }

Phase Phase::scaled(long long n) const {
  if (exact_) return Phase(q_ * Q(n));
  return real(x_ * double(n));
}

bool Phase::operator==(const Phase& o) const {
  if (exact_ && o.exact_) return q_ == o.q_;
  return dist_to_int(turns() - o.turns()) <= 1e-12;
}

std::string Phase::str() const {
  std::ostringstream os;
  if (exact_) {
    os << q_.numerator();
    if (q_.denominator() != 1) os << '/' << q_.denominator();
  } else {
    os.precision(17);
    os << x_;
  }
  return os.str();
}

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    size_t pos = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &pos);
      if (pos != s.size()) throw Error(Errc::Parse, "bad rational '" + s + "'");
      return Q(n);
    }
    long long n = std::stoll(s.substr(0, slash), &pos);
    if (pos != slash) throw Error(Errc::Parse, "bad rational '" + s + "'");
    std::string den = s.substr(slash + 1);
    long long d = std::stoll(den, &pos);
    if (pos != den.size() || d == 0) throw Error(Errc::Parse, "bad rational '" + s + "'");
    return Q(n, d);
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "bad rational '" + s + "'");
  }
}

Phase Phase::parse(const std::string& s) {
  bool looks_float = s.find_first_of(".eE") != std::string::npos;
  if (!looks_float) return Phase(parse_rational(s));
  try {
    size_t pos = 0;
    double x = std::stod(s, &pos);
    if (pos != s.size()) throw Error(Errc::Parse, "bad angle '" + s + "'");
    return real(x);
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "bad angle '" + s + "'");
  }
}

int ck_threads() {
  const char* env = std::getenv("KGRAPH_CK_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return std::clamp(n, 1, 64);
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  size_t workers = std::min<size_t>(ck_threads(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex m;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace kg
