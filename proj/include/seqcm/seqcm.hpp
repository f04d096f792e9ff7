#pragma once

#include "prime_field.hpp"
#include "ring.hpp"
#include "polynomial.hpp"
#include "parse.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "homology.hpp"
#include "filtration.hpp"
#include "invariants.hpp"
#include "parameters.hpp"
#include "session.hpp"
#include "experiment.hpp"
#include "report.hpp"
