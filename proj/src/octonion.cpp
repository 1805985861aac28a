/*
  This is octonion.cpp, part of smallchar.
*/
