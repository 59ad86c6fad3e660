#pragma once

#include "phylodist/distribution.hpp"
#include "phylodist/exact.hpp"
#include "phylodist/numbers.hpp"
#include "phylodist/selfcheck.hpp"
#include "phylodist/series.hpp"
#include "phylodist/trees.hpp"
