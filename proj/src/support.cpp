#include "superglinf/support.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace superglinf {

namespace {

ClassDecision finite_decision(const SupportProfile::Finite& f, GrowthClass cls) {
  ClassDecision d;
  d.member = true;
  if (cls == GrowthClass::c) {
    Index r = 0;
    for (auto& [i, j] : f.points) r = std::max(r, std::abs(i - j));
    d.witness = Rational(long(r));
    d.note = "finite support lies in a band of this radius";
  } else {
    d.note = "finite support belongs to every growth class";
    if (cls == GrowthClass::l) d.witness = make_rational(1, 2);
  }
  return d;
}

ClassDecision band_decision(Index radius, GrowthClass cls) {
  ClassDecision d;
  d.member = true;
  switch (cls) {
    case GrowthClass::c:
      d.witness = Rational(long(radius));
      d.note = "band radius is the witness constant";
      break;
    case GrowthClass::o:
      d.note = "bounded |i-j| makes |i-j|^t/|i+j| vanish for every t > 0";
      break;
    case GrowthClass::l:
      d.witness = make_rational(1, 2);
      d.note = "bounded |i-j| admits any positive exponent";
      break;
    case GrowthClass::g:
      d.note = "band support meets each cross-quadrant region finitely";
      break;
  }
  return d;
}

ClassDecision power_band_decision(const SupportProfile::PowerBand& pb, GrowthClass cls) {
  ClassDecision d;
  // radius ~ coeff * |i|^e with 0 < e < 1: along the band edge
  // |i-j|^t / |i+j| ~ coeff^t |i|^{te-1}, which vanishes iff t < 1/e.
  Rational inv_e = 1 / pb.exponent;
  switch (cls) {
    case GrowthClass::c:
      d.member = false;
      d.note = "radius is unbounded, no band constant exists";
      break;
    case GrowthClass::o:
      d.member = false;
      d.witness = inv_e;
      d.note = "at this exponent the edge ratio tends to a nonzero limit";
      break;
    case GrowthClass::l:
      d.member = true;
      d.witness = inv_e / 2;
      d.note = "any exponent below 1/e certifies the vanishing limit";
      break;
    case GrowthClass::g:
      d.member = true;
      d.note = "sublinear radius keeps (i - i0)(j0 - j) bounded above on the support";
      break;
  }
  return d;
}

}  // namespace

ClassDecision class_membership(const SupportProfile& profile, GrowthClass cls) {
  if (auto* f = std::get_if<SupportProfile::Finite>(&profile.kind)) return finite_decision(*f, cls);
  if (auto* b = std::get_if<SupportProfile::Band>(&profile.kind)) {
    if (b->radius < 0) throw std::domain_error("support profile: negative band radius");
    return band_decision(b->radius, cls);
  }
  const auto& pb = std::get<SupportProfile::PowerBand>(profile.kind);
  if (sgn(pb.coeff) <= 0) throw std::domain_error("support profile: coefficient must be positive");
  if (sgn(pb.exponent) < 0 || pb.exponent >= 1)
    throw std::domain_error("support profile: exponent outside [0, 1) is unsupported");
  if (is_zero(pb.exponent)) {
    mpz_class ceil_coeff = (pb.coeff.get_num() + pb.coeff.get_den() - 1) / pb.coeff.get_den();
    return band_decision(Index(ceil_coeff.get_si()), cls);
  }
  return power_band_decision(pb, cls);
}

}  // namespace superglinf
