// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hecke/casimir.hpp"
#include "hecke/characters.hpp"
#include "hecke/diagrams.hpp"
#include "hecke/laurent.hpp"
#include "hecke/murphy.hpp"
#include "hecke/oracle.hpp"
#include "hecke/partition.hpp"
#include "hecke/rational_function.hpp"
#include "hecke/series.hpp"
#include "hecke/verify.hpp"
