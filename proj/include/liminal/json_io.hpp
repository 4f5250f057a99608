#ifndef LIMINAL_JSON_IO_HPP
#define LIMINAL_JSON_IO_HPP

#include <string>

#include "liminal/bounds.hpp"
#include "liminal/game.hpp"
#include "liminal/reduction.hpp"

namespace liminal {

// {graph_spec, k, rounds: [{propagated, revealed, burned|null}], length}
std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

std::string bound_report_to_json(const BoundReport& rep);

// Reduction metadata: sizes, padding, T, threshold, per-vertex roles.
std::string reduction_meta_to_json(const ReductionGraph& rg);

}  // namespace liminal

#endif
