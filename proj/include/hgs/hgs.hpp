#pragma once

#include "hgs/byott.hpp"
#include "hgs/catalog.hpp"
#include "hgs/checks.hpp"
#include "hgs/error.hpp"
#include "hgs/gp_oracle.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/labeled_group.hpp"
#include "hgs/number_theory.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/permutation.hpp"
#include "hgs/reference_table.hpp"
#include "hgs/report.hpp"
#include "hgs/stabilizer_chain.hpp"
#include "hgs/transgrp.hpp"
