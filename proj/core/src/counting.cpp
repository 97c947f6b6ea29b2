#include "pairmps/counting.hpp"

#include "pairmps/errors.hpp"

namespace pairmps::group {

CountingBackend::CountingBackend(std::shared_ptr<const Backend> inner)
    : Backend(inner->descriptor()), inner_(std::move(inner)) {}

OpCounts CountingBackend::counts() const {
  return {pairings_.load(), g1_muls_.load(), gt_exps_.load()};
}

void CountingBackend::reset() const {
  pairings_ = 0;
  g1_muls_ = 0;
  gt_exps_ = 0;
}

}  // namespace pairmps::group
