#pragma once

#include "mroc/dataset.hpp"
#include "mroc/errors.hpp"
#include "mroc/gini.hpp"
#include "mroc/pipeline.hpp"
#include "mroc/report.hpp"
#include "mroc/roc.hpp"
#include "mroc/schema.hpp"
#include "mroc/whitening.hpp"
