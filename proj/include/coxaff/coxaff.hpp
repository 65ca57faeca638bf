#pragma once

#include "coxaff/bigint.hpp"
#include "coxaff/rational.hpp"
#include "coxaff/field.hpp"
#include "coxaff/matrix.hpp"
#include "coxaff/graph.hpp"
#include "coxaff/graph_io.hpp"
#include "coxaff/cartan.hpp"
#include "coxaff/reflection.hpp"
#include "coxaff/translation.hpp"
#include "coxaff/forms.hpp"
#include "coxaff/report.hpp"
#include "coxaff/catalog.hpp"
