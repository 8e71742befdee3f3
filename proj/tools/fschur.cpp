#include <cstdio>
int main() { std::puts("fschur"); return 0; }
