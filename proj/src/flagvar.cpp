/*
  This is flagvar.cpp, part of smallchar.
*/
