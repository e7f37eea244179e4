#pragma once

#include "dnls/field.hpp"

namespace dnls {

/// exp(i a \int_{-L}^x |f|^2) f. Modulus is preserved; G_a G_b = G_{a+b}.
Field gauge_transform(const Field& f, double a);

}  // namespace dnls
