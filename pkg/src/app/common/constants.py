LOG_LEVEL_ENV_NAME = "LOG_LEVEL"
CORPUS_DIR_ENV_NAME = "CORPUS_DIR"
