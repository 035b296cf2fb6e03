#pragma once

#include "pfilt/error.hpp"
#include "pfilt/rootsys.hpp"
#include "pfilt/weights.hpp"
#include "pfilt/charring.hpp"
#include "pfilt/simples.hpp"
#include "pfilt/g1b.hpp"
#include "pfilt/certify.hpp"
#include "pfilt/json_io.hpp"
