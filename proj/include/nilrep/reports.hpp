#ifndef NILREP_REPORTS_HPP
#define NILREP_REPORTS_HPP

#include "nilrep/algebra_io.hpp"
#include "nilrep/builder.hpp"
#include "nilrep/filiform10.hpp"

#include <optional>

namespace nilrep {
namespace reports {

/// Report assembly shared by the CLI and the python bindings. Keys are
/// stable; dimensions and counts are JSON integers, every exact value is
/// a rational string. Serializing with io::dump_report gives canonical
/// bytes.

nlohmann::json check_report(const io::AlgebraFile& af);

/// filtration_echo lands verbatim under construction.filtration ("lcs",
/// {"file": path}, {"terms": [...]}). Index ranges in req are validated
/// here (BadIndex).
nlohmann::json build_report(const io::AlgebraFile& af, const builder::BuildRequest& req,
                            const nlohmann::json& filtration_echo);

nlohmann::json reduce_report(const io::ModuleDoc& doc);

nlohmann::json filiform10_report(const filiform10::Params& p);

nlohmann::json bounds_report(unsigned n, std::optional<unsigned> beta);

} // namespace reports
} // namespace nilrep

#endif
