#include <algorithm>

#include "projrefl/enumerate.hpp"

namespace projrefl {

bool ParameterDomain::contains(const AlgNumber& t) const {
  if (min && (min_open ? !(t > *min) : t < *min)) return false;
  if (max && (max_open ? !(t < *max) : t > *max)) return false;
  return true;
}

std::string ParameterDomain::to_string() const {
  std::string out = min ? (min_open ? "(" : "[") + min->to_string() : std::string("(-inf");
  out += ", ";
  out += max ? max->to_string() + (max_open ? ")" : "]") : std::string("+inf)");
  return out;
}

ParametricMatrix::ParametricMatrix(Matrix<RationalFunction> entries, ParameterDomain domain, std::string parameter)
    : m_(std::move(entries)), domain_(std::move(domain)), parameter_(std::move(parameter)) {
  if (!m_.is_square()) throw PreconditionError("parametric Cartan matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    if (!(m_(i, i) == RationalFunction(2L)))
      throw PreconditionError("parametric diagonal entry " + std::to_string(i + 1) + " is " +
                              m_(i, i).to_string(parameter_) + ", expected 2");
  if (domain_.min && domain_.max && domain_.max < domain_.min) throw PreconditionError("empty parameter domain");
}

CartanMatrix ParametricMatrix::evaluate(const AlgNumber& t) const {
  AlgMatrix out(m_.rows(), m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) out(i, j) = m_(i, j).evaluate(t);
  return CartanMatrix(std::move(out));
}

ParametricSignature parametric_signature(const ParametricMatrix& p) {
  ParametricSignature sig;
  const auto cycles = simple_cycles(p.size(), [&p](int i, int j) { return !p(i, j).is_zero(); });
  for (const auto& cycle : cycles) {
    RationalFunction product(1L);
    for (std::size_t k = 0; k < cycle.size(); ++k) product *= p(cycle[k], cycle[(k + 1) % cycle.size()]);
    sig.emplace(cycle, std::move(product));
  }
  return sig;
}

bool satisfies_sign_rule(const CyclicSignature& sig) {
  for (const auto& [cycle, value] : sig) {
    const Sign expected = cycle.size() % 2 == 0 ? Sign::positive : Sign::negative;
    if (value.sign() != expected) return false;
  }
  return true;
}

PointCheck verify_at(const ParametricMatrix& p, const AlgNumber& t0) {
  if (!p.domain().contains(t0))
    throw PreconditionError(p.parameter() + " = " + t0.to_string() + " lies outside the domain " +
                            p.domain().to_string());
  PointCheck out{t0, p.evaluate(t0), {}, true};
  out.signature = cyclic_signature(out.matrix);
  for (const auto& [cycle, value] : out.signature)
    if (!is_integer(value)) out.over_z = false;
  return out;
}

IntegralitySolution solve_integrality(const ParametricMatrix& p) {
  const ParametricSignature sig = parametric_signature(p);
  IntegralitySolution out;

  bool all_constant = true;
  for (const auto& [cycle, f] : sig) {
    if (!f.is_constant()) {
      all_constant = false;
      continue;
    }
    const AlgNumber v = f.constant_value();
    const Sign expected = cycle.size() % 2 == 0 ? Sign::positive : Sign::negative;
    if (!is_integer(v) || v.sign() != expected) return out;
  }
  if (all_constant) {
    out.whole_domain = true;
    CyclicSignature constant;
    for (const auto& [cycle, f] : sig) constant.emplace(cycle, f.constant_value());
    out.constant_signature = std::move(constant);
    return out;
  }

  // A product αt together with one of the form β/t: both integers forces αt to
  // divide the constant αβ.
  const Cycle* f_cycle = nullptr;
  std::optional<RationalFunction::Monomial> f, g;
  std::size_t g_length = 0;
  for (const auto& [cf, ff] : sig) {
    const auto mf = ff.as_monomial();
    if (!mf || mf->exponent != 1) continue;
    for (const auto& [cg, fg] : sig) {
      const auto mg = fg.as_monomial();
      if (!mg || mg->exponent != -1) continue;
      f_cycle = &cf;
      f = mf;
      g = mg;
      g_length = cg.size();
      break;
    }
    if (f) break;
  }
  if (!f)
    throw PreconditionError(
        "integrality solving needs two cyclic products of the form a*t and b/t; "
        "check individual parameter values with verify_at");

  const AlgNumber k = f->coefficient * g->coefficient;
  if (!is_integer(k) || k.is_zero()) return out;
  const Sign f_sign = f_cycle->size() % 2 == 0 ? Sign::positive : Sign::negative;
  const Sign g_sign = g_length % 2 == 0 ? Sign::positive : Sign::negative;

  const Integer magnitude = abs(k.rational_value().get_num());
  std::vector<Integer> divisors;
  for (Integer a = 1; a * a <= magnitude; ++a) {
    if (magnitude % a != 0) continue;
    divisors.push_back(a);
    if (a * a != magnitude) divisors.push_back(magnitude / a);
  }
  std::vector<PointCheck> points;
  for (const Integer& a : divisors) {
    const AlgNumber n = f_sign == Sign::positive ? AlgNumber(Rational(a)) : AlgNumber(Rational(-a));
    if ((k / n).sign() != g_sign) continue;
    const AlgNumber t = n / f->coefficient;
    if (!p.domain().contains(t)) continue;
    try {
      PointCheck pc = verify_at(p, t);
      if (pc.over_z && satisfies_sign_rule(pc.signature)) points.push_back(std::move(pc));
    } catch (const DivisionByZero&) {
      continue;
    }
  }
  std::sort(points.begin(), points.end(), [](const PointCheck& x, const PointCheck& y) { return x.t < y.t; });
  out.points = std::move(points);
  return out;
}

}  // namespace projrefl
