#pragma once

// Reference-based reclassification of bibliographic items into unique subject
// categories and broad areas, with evaluation metrics, a TF-IDF title
// fallback, and a synthetic corpus generator.

#include "refclass/common.hpp"
#include "refclass/corpus.hpp"
#include "refclass/engine.hpp"
#include "refclass/metrics.hpp"
#include "refclass/result_io.hpp"
#include "refclass/synth.hpp"
#include "refclass/taxonomy.hpp"
#include "refclass/textfallback.hpp"
