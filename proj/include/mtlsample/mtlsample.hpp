#pragma once

#include "mtlsample/rational.hpp"
#include "mtlsample/interval.hpp"
#include "mtlsample/sets.hpp"
#include "mtlsample/formula.hpp"
#include "mtlsample/formula_io.hpp"
#include "mtlsample/behavior.hpp"
#include "mtlsample/behavior_io.hpp"
#include "mtlsample/semantics.hpp"
#include "mtlsample/transform.hpp"
#include "mtlsample/flatten.hpp"
#include "mtlsample/verify.hpp"
#include "mtlsample/spec_io.hpp"
#include "mtlsample/oracle.hpp"
#include "mtlsample/generators.hpp"
#include "mtlsample/harness.hpp"
