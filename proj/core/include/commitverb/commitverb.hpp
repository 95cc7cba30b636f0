#pragma once

#include "commitverb/classifier.hpp"
#include "commitverb/corpus.hpp"
#include "commitverb/corpus_io.hpp"
#include "commitverb/errors.hpp"
#include "commitverb/evaluation.hpp"
#include "commitverb/features.hpp"
#include "commitverb/ingest.hpp"
#include "commitverb/text_analysis.hpp"
#include "commitverb/verb_groups.hpp"

namespace commitverb {

inline constexpr const char* kToolVersion = COMMITVERB_VERSION;

}  // namespace commitverb
