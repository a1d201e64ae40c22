#pragma once

#include "ineq2d/bounds.hpp"
#include "ineq2d/errors.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/jobs.hpp"
#include "ineq2d/quad.hpp"
#include "ineq2d/report.hpp"
#include "ineq2d/sharpness.hpp"
