#pragma once

#include "qcongr/qfactor/cyclotomic.hpp"
#include "qcongr/qfactor/qpoch.hpp"
#include "qcongr/qfactor/term.hpp"
