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
import pathlib
import configparser


def getConfigDir():
    """
    Returns the directory used for configuration.
    If ZOSRDV_CONFIG is defined the value is returned,
    otherwise <project_base>/config.
    """
    if "ZOSRDV_CONFIG" in os.environ:
        configDir = pathlib.Path(os.environ["ZOSRDV_CONFIG"])
    else:
        pathFile = pathlib.Path(__file__)
        pathProjectBase = pathFile.parents[2]
        configDir = pathProjectBase / "config"
    return configDir


def getSite():
    """
    Returns the ZOSRDV_SITE variable from environment.
    If not defined returns 'Default'.
    """
    site = "Default"
    if "ZOSRDV_SITE" in os.environ:
        site = os.environ["ZOSRDV_SITE"]
    return site


def setSite(site):
    """
    Sets the ZOSRDV_SITE variable.
    """
    os.environ["ZOSRDV_SITE"] = site


def getConfig(site=None):
    config = configparser.ConfigParser()
    if site is None:
        site = getSite()
    configFile = site + ".ini"
    configDir = getConfigDir()
    configPath = configDir / configFile.lower()
    if configPath.exists():
        config.read(configPath.as_posix())
    return config


def getTaskConfig(taskName, site=None):
    dictConfig = {}
    config = getConfig(site)
    sections = config.sections()
    # First search in included configs
    if "Include" in sections:
        for includedSite in config["Include"]:
            dictConfig.update(getTaskConfig(taskName, includedSite))
    # Then update with the current config
    if taskName in sections:
        dictConfig.update(dict(config[taskName]))
    # Substitute ${} from os.environ
    for key in dictConfig:
        dictConfig[key] = os.path.expandvars(dictConfig[key])
    return dictConfig


def get(task, parameterName, defaultValue=None):
    if isinstance(task, str):
        taskConfig = getTaskConfig(task)
    else:
        taskConfig = getTaskConfig(task.__class__.__name__)
    value = taskConfig.get(parameterName.lower(), defaultValue)
    return value


def readKeyValueFile(filePath):
    """
    Reads a 'key = value' file, e.g. an experiment configuration passed
    with --config, as the single section of a configparser file.
    """
    config = configparser.ConfigParser(interpolation=None)
    with open(str(filePath)) as f:
        text = f.read()
    try:
        config.read_string("[Config]\n" + text, source=str(filePath))
    except configparser.Error as e:
        raise RuntimeError("Malformed configuration file {0}: {1}".format(filePath, e))
    return {key: os.path.expandvars(value) for key, value in config["Config"].items()}
