#pragma once

#include "signsearch/cnf.hpp"
#include "signsearch/errors.hpp"
#include "signsearch/oracle.hpp"
#include "signsearch/random.hpp"
#include "signsearch/reduction.hpp"
#include "signsearch/sign_oracle.hpp"
#include "signsearch/state_vector.hpp"
