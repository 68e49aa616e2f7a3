extern "C" { const char* nha_version(void){ return "0.1.0"; } }
