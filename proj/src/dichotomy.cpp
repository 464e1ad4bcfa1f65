#include "qolab/dilworth.hpp"
#include "qolab/paper_procedures.hpp"

namespace qolab {

DichotomyResult dichotomy(const QuasiOrder& q, int k, Budget* budget) {
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "dichotomy needs a positive k");
  const int width = poset_width(q);
  if (width <= k) {
    ChainCover cover = paper_chain_cover(q, budget).cover;
    while (static_cast<int>(cover.chains.size()) < k)
      cover.chains.emplace_back();
    return DichotomyResult{std::move(cover)};
  }
  return DichotomyResult{*least_antichain_of_size(q, k + 1)};
}

}  // namespace qolab
