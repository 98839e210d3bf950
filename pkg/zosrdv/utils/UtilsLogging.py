#
# Copyright (c) The zosrdv developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the "Software"), to deal in
# the Software without restriction, including without limitation the rights to
# use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of
# the Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS
# FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER
# IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

__authors__ = ["zosrdv developers"]
__license__ = "MIT"
__date__ = "18/10/2026"

import os
import time
import graypy
import logging
import logging.handlers

from zosrdv.utils import UtilsConfig

LOGGER_NAME = "zosrdv"

LOGGING_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
    "FATAL": logging.FATAL,
}


def addGrayLogHandler(logger):
    server = UtilsConfig.get("Logging", "graylog_server")
    port = UtilsConfig.get("Logging", "graylog_port")
    if server is not None and port is not None:
        graylogHandler = graypy.GELFUDPHandler(server, int(port))
        logger.addHandler(graylogHandler)


def addStreamHandler(logger):
    streamHandler = logging.StreamHandler()
    streamFormat = UtilsConfig.get(
        "Logging", "stream_format", "%(asctime)s %(levelname)-8s %(message)s"
    )
    streamHandler.setFormatter(logging.Formatter(streamFormat))
    logger.addHandler(streamHandler)


def addFileHandler(logger):
    logPath = UtilsConfig.get("Logging", "log_file_path")
    if logPath is not None:
        if "DATE" in logPath:
            logPath = logPath.replace(
                "DATE", time.strftime("%Y-%m-%d", time.localtime(time.time()))
            )
        logDir = os.path.dirname(logPath)
        if logDir != "" and not os.path.exists(logDir):
            os.makedirs(logDir)
        maxBytes = int(float(UtilsConfig.get("Logging", "log_file_maxbytes", 1e7)))
        backupCount = int(UtilsConfig.get("Logging", "log_file_backupCount", 0))
        fileHandler = logging.handlers.RotatingFileHandler(
            logPath, maxBytes=maxBytes, backupCount=backupCount
        )
        logFileFormat = UtilsConfig.get(
            "Logging",
            "log_file_format",
            "%(asctime)s %(processName)-12s %(module)-18s %(levelname)-8s %(message)s",
        )
        fileHandler.setFormatter(logging.Formatter(logFileFormat))
        logger.addHandler(fileHandler)


def setLoggingLevel(logger, level):
    if level is None:
        level = UtilsConfig.get("Logging", "level")
    if level is None:
        level = "INFO"
    loggingLevel = LOGGING_LEVELS.get(level.upper())
    if loggingLevel is None:
        raise RuntimeError('Unknown logging level: "{0}"'.format(level))
    logger.setLevel(loggingLevel)


def getLevelFromFlags(debug=False, warning=False, error=False):
    """
    Maps the --debug / --warning / --error command line flags to a level name.
    Returns None when no flag is given so that the site configuration decides.
    """
    if error:
        return "ERROR"
    elif warning:
        return "WARNING"
    elif debug:
        return "DEBUG"
    return None


def getLogger(level=None):
    logger = logging.getLogger(LOGGER_NAME)
    # Check if handlers already added:
    hasGraylogHandler = False
    hasStreamHandler = False
    hasFileHandler = False
    for handler in logger.handlers:
        if isinstance(handler, graypy.GELFUDPHandler):
            hasGraylogHandler = True
        elif isinstance(handler, logging.handlers.RotatingFileHandler):
            hasFileHandler = True
        elif isinstance(handler, logging.StreamHandler):
            hasStreamHandler = True
    if not hasGraylogHandler:
        addGrayLogHandler(logger)
    if not hasStreamHandler:
        addStreamHandler(logger)
    if not hasFileHandler:
        addFileHandler(logger)
    # Module level getLogger() calls keep a level set explicitly before
    if level is not None or logger.level == logging.NOTSET:
        setLoggingLevel(logger, level)
    return logger
