#include <atomic>

#include "bisetkit/config.hpp"

namespace bisetkit {

namespace {

std::atomic<std::size_t> order_bound_value{200};
std::atomic<std::size_t> product_bound_value{40000};

} // anonymous namespace

std::size_t order_bound()
{ return order_bound_value.load(); }

void set_order_bound(std::size_t n)
{ order_bound_value.store(n); }

std::size_t product_bound()
{ return product_bound_value.load(); }

void set_product_bound(std::size_t n)
{ product_bound_value.store(n); }

} // namespace bisetkit
