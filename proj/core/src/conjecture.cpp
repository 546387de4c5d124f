// Copyright 2026 The latsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latsec/conjecture.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <utility>

#include "latsec/error.hpp"

namespace latsec {
namespace {

const Rational kQuarter(1, 4);
const Rational kGiveUpWidth(1, mpz_class(1) << 400);

// Upper bound for |P'| on [-r, r].
Rational derivative_bound(const ZPolynomial& p, const Rational& r) {
  Rational bound = 0;
  Rational power = 1;
  for (int k = 1; k <= p.degree(); ++k) {
    bound += abs(p.coeff(k)) * k * power;
    power *= r;
  }
  return bound;
}

std::string interval_str(const RationalInterval& iv) {
  return "[" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]";
}

enum class Verdict { kAbove, kNotAbove, kUndecided };

struct CriticalCheck {
  Verdict verdict;
  RationalInterval interval;
  Rational estimate;  // P at the interval midpoint, exact
};

// Decides whether P exceeds P(1/4) at the unique root of P' inside iv.
CriticalCheck check_critical(const ZPolynomial& p, const SturmSequence& sturm, RationalInterval iv,
                             const Rational& p_quarter, std::vector<std::string>& log) {
  if (iv.is_point()) {
    const Rational v = p(iv.lo);
    log.push_back("critical point z = " + iv.lo.get_str() + " is rational; P = " + v.get_str());
    return {v > p_quarter ? Verdict::kAbove : Verdict::kNotAbove, iv, v};
  }
  while (true) {
    const Rational w = iv.width();
    // Exact values at interior endpoints are witnesses in their own right.
    for (const Rational* e : {&iv.lo, &iv.hi}) {
      if (*e > 0 && *e < kQuarter && p(*e) <= p_quarter) {
        log.push_back("P(" + e->get_str() + ") <= P(1/4): interior value not above the endpoint");
        return {Verdict::kNotAbove, iv, p(*e)};
      }
    }
    const Rational r = abs(iv.hi) > abs(iv.lo) ? abs(iv.hi) : abs(iv.lo);
    const Rational slack = w * derivative_bound(p, r);
    const Rational at_lo = p(iv.lo);
    if (at_lo - slack > p_quarter) {
      std::ostringstream os;
      os << "critical interval " << interval_str(iv) << ": P - P(1/4) >= "
         << Rational(at_lo - slack - p_quarter).get_d() << " > 0 (certified)";
      log.push_back(os.str());
      return {Verdict::kAbove, iv, p(iv.midpoint())};
    }
    if (at_lo + slack < p_quarter) {
      log.push_back("critical interval " + interval_str(iv) + ": P < P(1/4) (certified)");
      return {Verdict::kNotAbove, iv, p(iv.midpoint())};
    }
    if (w < kGiveUpWidth) {
      log.push_back("critical interval " + interval_str(iv) + ": undecided at width 2^-400");
      return {Verdict::kUndecided, iv, p(iv.midpoint())};
    }
    const Rational mid = iv.midpoint();
    if (sturm.base()(mid) == 0) {
      iv = {mid, mid};
      const Rational v = p(mid);
      log.push_back("critical point z = " + mid.get_str() + " found during refinement; P = " + v.get_str());
      return {v > p_quarter ? Verdict::kAbove : Verdict::kNotAbove, iv, v};
    }
    if (sturm.count_open(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

}  // namespace

ConjectureCertificate verify_conjecture(const ZPolynomial& poly) {
  if (poly.degree() < 1) throw DomainError("verify_conjecture needs a nonconstant polynomial");

  ConjectureCertificate cert;
  auto& log = cert.method;
  cert.p_at_quarter = poly(kQuarter);
  cert.p_at_zero = poly(Rational(0));
  log.push_back("P(z) = " + poly.to_string());
  log.push_back("P(1/4) = " + cert.p_at_quarter.get_str() + ", P(0) = " + cert.p_at_zero.get_str());

  const ZPolynomial dp = poly.derivative();
  log.push_back("P'(z) = " + dp.to_string());
  if (dp.degree() >= 1) {
    cert.critical_points = isolate_real_roots(dp, Rational(0), kQuarter, kCriticalIntervalWidth);
  }
  log.push_back("Sturm isolation: " + std::to_string(cert.critical_points.size()) + " root(s) of P' in (0, 1/4)");

  cert.holds = true;
  Rational best_value = cert.p_at_quarter;
  cert.min_location = kQuarter;

  if (cert.p_at_zero <= cert.p_at_quarter) {
    cert.holds = false;
    log.push_back("P(0) <= P(1/4): minimum not unique to z = 1/4");
    if (cert.p_at_zero < best_value) {
      best_value = cert.p_at_zero;
      cert.min_location = Rational(0);
    }
  }

  if (!cert.critical_points.empty()) {
    const SturmSequence sturm(square_free_part(dp));
    for (auto& iv : cert.critical_points) {
      CriticalCheck c = check_critical(poly, sturm, iv, cert.p_at_quarter, log);
      iv = c.interval;
      if (c.verdict == Verdict::kAbove) continue;
      cert.holds = false;
      if (c.estimate < best_value) {
        best_value = c.estimate;
        if (c.interval.is_point()) {
          cert.min_location = c.interval.lo;
        } else {
          cert.min_location = c.interval;
        }
      }
    }
  }

  log.push_back(cert.holds ? "minimum over [0, 1/4] attained only at z = 1/4: holds"
                           : "minimum over [0, 1/4] not uniquely at z = 1/4: fails");
  return cert;
}

std::string certificate_to_json(const ConjectureCertificate& cert, std::optional<int> dimension) {
  const auto frac = [](const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); };
  nlohmann::ordered_json j;
  j["dimension"] = dimension ? nlohmann::ordered_json(*dimension) : nlohmann::ordered_json(nullptr);
  j["holds"] = cert.holds;
  auto intervals = nlohmann::ordered_json::array();
  for (const auto& iv : cert.critical_points) intervals.push_back({frac(iv.lo), frac(iv.hi)});
  j["critical_intervals"] = std::move(intervals);
  j["P_at_quarter"] = frac(cert.p_at_quarter);
  return j.dump();
}

}  // namespace latsec
