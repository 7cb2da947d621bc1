#pragma once

#include <plesken/scalar.hpp>
#include <plesken/matrix.hpp>
#include <plesken/algebra.hpp>
#include <plesken/diagrams.hpp>
#include <plesken/builders.hpp>
#include <plesken/lie.hpp>
#include <plesken/plesken_lie.hpp>
#include <plesken/cellular.hpp>
#include <plesken/io.hpp>
#include <plesken/report.hpp>
