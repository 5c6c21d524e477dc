#include <iostream>
int main(){ std::cout << "postlie\n"; }
