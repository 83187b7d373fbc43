#pragma once

// Umbrella header for the segkit sequence-segmentation toolkit.

#include "segkit/approx.hpp"
#include "segkit/bench.hpp"
#include "segkit/cumulative.hpp"
#include "segkit/errors.hpp"
#include "segkit/exact_dp.hpp"
#include "segkit/io.hpp"
#include "segkit/maxseg.hpp"
#include "segkit/penalty.hpp"
#include "segkit/report.hpp"
#include "segkit/segmentation.hpp"
#include "segkit/series.hpp"
#include "segkit/synthetic.hpp"
#include "segkit/table.hpp"
