#include "fraclayer/fraclap.hpp"

namespace fraclayer {

double fraclap_arctan_exact(double x) { return arctan_layer().fraclap_exact(x); }

}  // namespace fraclayer
