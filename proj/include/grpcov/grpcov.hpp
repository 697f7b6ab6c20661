#pragma once

#include "arith.hpp"
#include "bitset.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "corpus.hpp"
#include "covering.hpp"
#include "cyclic.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "isomorphism.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "structure.hpp"
#include "subgroup.hpp"
