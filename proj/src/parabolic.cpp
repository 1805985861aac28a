/*
  This is parabolic.cpp, part of smallchar.
*/
