#pragma once

#include "finsite/algebra.hpp"
#include "finsite/catalog.hpp"
#include "finsite/category.hpp"
#include "finsite/ei_dense.hpp"
#include "finsite/errors.hpp"
#include "finsite/field.hpp"
#include "finsite/group.hpp"
#include "finsite/io.hpp"
#include "finsite/matrix.hpp"
#include "finsite/module.hpp"
#include "finsite/presheaf.hpp"
#include "finsite/random.hpp"
#include "finsite/sheaf.hpp"
#include "finsite/sieve.hpp"
#include "finsite/skew.hpp"
#include "finsite/structure.hpp"
#include "finsite/topology.hpp"
#include "finsite/transport.hpp"
