#pragma once

#include "amal/canonical.hpp"
#include "amal/geodesics.hpp"
#include "amal/normal_form.hpp"
#include "amal/oracle.hpp"
#include "amal/poly.hpp"
#include "amal/presentation.hpp"
#include "amal/ratfun.hpp"
#include "amal/series.hpp"
#include "amal/word.hpp"
