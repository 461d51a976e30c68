#pragma once

#include <cstddef>

namespace bisetkit {

// Largest group order that may be materialized.
std::size_t order_bound();
void set_order_bound(std::size_t n);

// Largest |H|*|G| for which biset spaces B(H,G) are enumerated.
std::size_t product_bound();
void set_product_bound(std::size_t n);

} // namespace bisetkit
