#pragma once

#include "restling/corpus_io.hpp"
#include "restling/detectors.hpp"
#include "restling/errors.hpp"
#include "restling/hierarchy.hpp"
#include "restling/report.hpp"
#include "restling/semantics.hpp"
#include "restling/text_pipeline.hpp"
#include "restling/types.hpp"
#include "restling/uri_model.hpp"
