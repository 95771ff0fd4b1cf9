#pragma once

#include "srlc/audit.hpp"
#include "srlc/cohomology.hpp"
#include "srlc/complex.hpp"
#include "srlc/corpus.hpp"
#include "srlc/errors.hpp"
#include "srlc/field.hpp"
#include "srlc/io.hpp"
#include "srlc/linalg.hpp"
#include "srlc/local_cohomology.hpp"
#include "srlc/stanley_reisner.hpp"
#include "srlc/subdivision.hpp"
#include "srlc/vertex_set.hpp"
