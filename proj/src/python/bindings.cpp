#include <pybind11/pybind11.h>

PYBIND11_MODULE(agsac, m) { m.doc() = "placeholder"; }
