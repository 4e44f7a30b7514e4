#pragma once

#include "opplab/census.hpp"
#include "opplab/coxeter.hpp"
#include "opplab/error.hpp"
#include "opplab/flags.hpp"
#include "opplab/grassmann.hpp"
#include "opplab/matrix.hpp"
#include "opplab/opposition.hpp"
#include "opplab/polytope.hpp"
#include "opplab/rational.hpp"
#include "opplab/tori.hpp"
