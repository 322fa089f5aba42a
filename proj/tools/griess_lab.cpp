#include "griesslab/report.hpp"

#include <iostream>

int main(int argc, char** argv) { return griesslab::run(argc, argv, std::cout, std::cerr); }
