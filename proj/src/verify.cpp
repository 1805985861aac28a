/*
  This is verify.cpp, part of smallchar.
*/
