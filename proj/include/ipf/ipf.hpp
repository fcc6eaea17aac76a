#pragma once

#include "ipf/arrange.hpp"
#include "ipf/classify.hpp"
#include "ipf/count.hpp"
#include "ipf/error.hpp"
#include "ipf/format.hpp"
#include "ipf/lattice.hpp"
#include "ipf/numbers.hpp"
#include "ipf/oracle.hpp"
#include "ipf/query.hpp"
#include "ipf/simulate.hpp"
#include "ipf/verify.hpp"
