#pragma once

#include "qlogic/epr.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/matrix.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/scenario.hpp"
#include "qlogic/subspace.hpp"
