#include "primelab/numeric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace primelab {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, unsigned max_depth) {
    double err = 0.0;
    const double v =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol, &err);
    return {v, err};
}

}  // namespace primelab
