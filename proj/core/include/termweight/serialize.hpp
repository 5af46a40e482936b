#pragma once

#include <string>
#include <string_view>

#include "termweight/classifier.hpp"
#include "termweight/textproc.hpp"
#include "termweight/weighting.hpp"

namespace termweight {

// Vocabulary: one `index<TAB>kind<TAB>feature` line per entry (kind is
// "uni" or "bi"), preceded by a metadata comment line carrying ngram_max
// and min_count.
std::string serialize_vocabulary(const Vocabulary& vocab);
Vocabulary parse_vocabulary(std::string_view text);

// Weight model: header lines (local/global scheme with parameters,
// normalize flag, collection stats, term count) followed by one
// `index<TAB>g` line per term. Doubles use shortest round-trip decimals,
// so parsing restores them bit-exactly.
std::string serialize_weight_model(const WeightModel& wm, const GlobalScheme& global);
std::pair<WeightModel, GlobalScheme> parse_weight_model(std::string_view text);

// Linear model: `dim<TAB>n`, then `index<TAB>weight` for nonzero entries.
std::string serialize_linear_model(const LinearModel& model);
LinearModel parse_linear_model(std::string_view text);

} // namespace termweight
