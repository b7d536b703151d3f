#include <spinweil/purespinor.hpp>

namespace spinweil {

template Multivector<Rational> pure_spinor_of(const HyperbolicSpace&, const std::vector<std::vector<Rational>>&);
template Multivector<FieldElem> pure_spinor_of(const HyperbolicSpace&, const std::vector<std::vector<FieldElem>>&);
template Purity<Rational> is_pure(const HyperbolicSpace&, const Multivector<Rational>&);
template Purity<FieldElem> is_pure(const HyperbolicSpace&, const Multivector<FieldElem>&);

}  // namespace spinweil
