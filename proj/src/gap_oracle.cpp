#include "lacunary/gap_oracle.hpp"

#include <mpfr.h>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

constexpr mpfr_prec_t kPrecision = 128;

class Float {
 public:
  Float() { mpfr_init2(v_, kPrecision); }
  ~Float() { mpfr_clear(v_); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// h_min(d) rounded toward zero.
void height_bound_down(Float& out, unsigned d) {
  if (d == 1) {
    mpfr_const_log2(out.get(), MPFR_RNDD);
    return;
  }
  Float l;
  mpfr_set_ui(l.get(), 3ul * d, MPFR_RNDU);
  mpfr_log(l.get(), l.get(), MPFR_RNDU);
  mpfr_pow_ui(l.get(), l.get(), 3, MPFR_RNDU);
  mpfr_mul_ui(l.get(), l.get(), d, MPFR_RNDU);
  mpfr_ui_div(out.get(), 2, l.get(), MPFR_RNDD);
}

}  // namespace

const Integer& GapThreshold::value() const {
  if (!value_) throw InputError("GapThreshold: infinite threshold has no value");
  return *value_;
}

Rational height_lower_bound(unsigned d) {
  if (d == 0) throw InputError("height_lower_bound: d must be positive");
  Float h;
  height_bound_down(h, d);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), h.get());
  return q;
}

GapThreshold gamma(const Integer& norm1, unsigned d, const GapConfig& cfg) {
  if (d == 0) throw InputError("gamma: d must be positive");
  if (norm1 <= 0) throw InputError("gamma: norm must be positive");
  if (cfg.mode == GapMode::paranoid) return GapThreshold::infinite();

  Float quotient;
  if (d == 1) {
    // h_min(1) = ln 2 exactly: the quotient is log2 ||f||_1 + 2.
    mpfr_set_z(quotient.get(), norm1.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(quotient.get(), quotient.get(), MPFR_RNDU);
    mpfr_add_ui(quotient.get(), quotient.get(), 2, MPFR_RNDU);
  } else {
    Float numerator, ln2, h;
    mpfr_set_z(numerator.get(), norm1.get_mpz_t(), MPFR_RNDU);
    mpfr_log(numerator.get(), numerator.get(), MPFR_RNDU);
    mpfr_const_log2(ln2.get(), MPFR_RNDU);
    mpfr_mul_ui(ln2.get(), ln2.get(), d + 1ul, MPFR_RNDU);
    mpfr_add(numerator.get(), numerator.get(), ln2.get(), MPFR_RNDU);
    height_bound_down(h, d);
    mpfr_div(quotient.get(), numerator.get(), h.get(), MPFR_RNDU);
  }
  if (cfg.custom_scale) {
    if (*cfg.custom_scale <= 0) throw InputError("gamma: custom scale must be positive");
    mpfr_mul_q(quotient.get(), quotient.get(), cfg.custom_scale->get_mpq_t(), MPFR_RNDU);
  }
  Integer result;
  mpfr_ceil(quotient.get(), quotient.get());
  mpfr_get_z(result.get_mpz_t(), quotient.get(), MPFR_RNDU);
  result += d;
  return GapThreshold::finite(std::move(result));
}

GapThreshold gamma(const SparsePoly& f, unsigned d, const GapConfig& cfg) {
  if (f.is_zero()) throw InputError("gamma: zero polynomial");
  return gamma(norm_l1(f), d, cfg);
}

}  // namespace lacunary
