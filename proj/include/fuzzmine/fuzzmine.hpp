#pragma once

#include "fuzzmine/error.hpp"
#include "fuzzmine/rational.hpp"
#include "fuzzmine/taxonomy.hpp"
#include "fuzzmine/dataset.hpp"
#include "fuzzmine/fuzzy_support.hpp"
#include "fuzzmine/miner.hpp"
#include "fuzzmine/rules.hpp"
#include "fuzzmine/oracle.hpp"
#include "fuzzmine/io.hpp"
#include "fuzzmine/report.hpp"
