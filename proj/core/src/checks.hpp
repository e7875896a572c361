#pragma once

#include <string>

#include "mci/morphism.hpp"
#include "mci/report.hpp"

namespace mci::detail {

/// One precondition line standing for a whole sub-report.
Check summarize(const Report& r, std::string law);
/// Precondition line for is_morphism(f).
Check morphism_line(const Morphism& f, std::string law);
/// Throws PreconditionError carrying the first failure of `r`.
[[noreturn]] void reject(const Report& r, const std::string& what);
bool is_identity(const Morphism& f);

}  // namespace mci::detail
