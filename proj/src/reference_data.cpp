#include "hamvf/reference_data.hpp"

namespace hamvf::reference {

ExpPoly volterra_adm_series() {
  return ExpPoly::term(-1, 1) + ExpPoly::term(Rational(1, 12), 4) - ExpPoly::term(Rational(1, 252), 7) +
         ExpPoly::term(Rational(1, 6048), 10) - ExpPoly::term(Rational(1, 157248), 13) +
         ExpPoly::term(Rational(79, 264176640), 16);
}

ExpPoly volterra_oqham_series() {
  return ExpPoly::term(-1, 1) + ExpPoly::term(Rational(1, 24), 4) - ExpPoly::term(Rational(1, 1008), 7) +
         ExpPoly::term(Rational(1, 48384), 10) - ExpPoly::term(Rational(1, 2515968), 13) +
         ExpPoly::term(Rational::parse("37/5072191488"), 16);
}

}  // namespace hamvf::reference
