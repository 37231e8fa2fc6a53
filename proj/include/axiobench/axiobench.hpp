#pragma once

// Umbrella header: the full harness in one include.

#include "axioms.hpp"
#include "config.hpp"
#include "digest.hpp"
#include "fixtures.hpp"
#include "model.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "runner.hpp"
#include "signals.hpp"
#include "stats.hpp"
#include "timing.hpp"
