#ifndef HOMNERVE_HOMNERVE_HPP
#define HOMNERVE_HOMNERVE_HPP

#include "chain.hpp"
#include "error.hpp"
#include "field.hpp"
#include "generators.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"
#include "theorems.hpp"

#endif
