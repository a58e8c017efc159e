#pragma once

#include "tasep/bigint.hpp"
#include "tasep/catalan_path.hpp"
#include "tasep/errors.hpp"
#include "tasep/laurent.hpp"
#include "tasep/lgv.hpp"
#include "tasep/markov.hpp"
#include "tasep/partition_function.hpp"
#include "tasep/poly_matrix.hpp"
#include "tasep/state_word.hpp"
#include "tasep/tableau.hpp"
