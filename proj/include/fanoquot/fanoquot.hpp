#pragma once

#include "rational.hpp"
#include "permutation.hpp"
#include "group.hpp"
#include "age.hpp"
#include "spectrum.hpp"
#include "endo.hpp"
#include "report.hpp"
