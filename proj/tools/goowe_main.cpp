// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "goowe/cli/commands.hpp"

int main(int argc, char** argv) { return goowe::run_cli(argc, argv, std::cout, std::cerr); }
