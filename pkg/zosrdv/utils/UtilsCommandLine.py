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

import sys
import json
import argparse
import pathlib

import jsonschema

from zosrdv.utils import UtilsConfig
from zosrdv.utils import UtilsVerify
from zosrdv.utils import UtilsLogging
from zosrdv.utils import UtilsExperiment
from zosrdv.utils.UtilsChannel import ChannelSet

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_INVALID_CONFIGURATION = 2

# Site configuration section read by each subcommand
SECTIONS = {
    "generate": "GenerateSchedule",
    "simulate": "SimulatePair",
    "verify": "VerifyBounds",
    "experiment": "RendezvousExperiment",
}

DEFAULTS = {
    "generate": {"seed": "0"},
    "simulate": {"seed": "0", "algo": "zos"},
    "verify": {"seed": "0", "gate": ",".join(UtilsVerify.GATES)},
    "experiment": {
        "theta": ",".join(str(theta) for theta in UtilsExperiment.DEFAULT_THETAS),
        "algo": ",".join(UtilsExperiment.ALGORITHMS),
        "model": "asymmetric",
    },
}


def parseList(value, converter, name):
    try:
        return [converter(item.strip()) for item in str(value).split(",") if item.strip() != ""]
    except ValueError:
        raise RuntimeError("Invalid value for '{0}': {1}".format(name, value))


def parseScalar(value, converter, name):
    try:
        return converter(str(value).strip())
    except ValueError:
        raise RuntimeError("Invalid value for '{0}': {1}".format(name, value))


def createParser():
    parser = argparse.ArgumentParser(
        prog="zosrdv",
        description="ZOS channel-hopping rendezvous: schedules, simulation, bound verification, benchmark",
    )
    parser.add_argument("--debug", action="store_true", help="Debug log level")
    parser.add_argument("--warning", action="store_true", help="Warning log level")
    parser.add_argument("--error", action="store_true", help="Error log level")
    parser.add_argument("--config", dest="configFile", help="key = value file, overridden by flags")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    generate = subparsers.add_parser("generate", help="Print the ZOS schedule of one user")
    generate.add_argument("--channels", help="Size M of the whole channel set")
    generate.add_argument("--available", help="Available channels, e.g. 1,3,4")
    generate.add_argument("--stay", help="Stay channel (default: random)")
    generate.add_argument("--seed", help="Master seed")

    simulate = subparsers.add_parser("simulate", help="Simulate one pair of users")
    simulate.add_argument("--channels", help="Size M of the whole channel set")
    simulate.add_argument("--available1", help="Available channels of user 1")
    simulate.add_argument("--available2", help="Available channels of user 2")
    simulate.add_argument("--offset", help="Slots user 2 started before user 1")
    simulate.add_argument("--stay1", help="Stay channel of user 1")
    simulate.add_argument("--stay2", help="Stay channel of user 2")
    simulate.add_argument("--schedule1", help="Schedule text file of user 1")
    simulate.add_argument("--schedule2", help="Schedule text file of user 2")
    simulate.add_argument("--seed", help="Master seed")
    simulate.add_argument("--horizon", help="Slots simulated (default: MTTR bound + 1)")
    simulate.add_argument("--algo", help="zos or random")

    verify = subparsers.add_parser("verify", help="Run bound verification gates")
    verify.add_argument("--gate", help="Gates, any of {0}".format(",".join(UtilsVerify.GATES)))
    verify.add_argument("--seed", help="Master seed")
    verify.add_argument("--seeds", help="Number of rng seeds per configuration")
    verify.add_argument("--configurations", help="Configurations of the sampled gate")

    experiment = subparsers.add_parser("experiment", help="Monte-Carlo TTR sweep, CSV output")
    experiment.add_argument("--channels", help="Size M of the whole channel set")
    experiment.add_argument("--theta", help="Fractions of available channels, e.g. 0.1,0.2")
    experiment.add_argument("--common", help="Channels common to both users")
    experiment.add_argument("--trials", help="Trials per theta")
    experiment.add_argument("--seed", help="Master seed")
    experiment.add_argument("--horizon", help="Slots simulated per trial")
    experiment.add_argument("--algo", help="Algorithms, any of zos,random")
    experiment.add_argument("--model", help="asymmetric or symmetric")
    experiment.add_argument("--out", help="CSV output path (default: stdout)")
    return parser


def collectSettings(command, args):
    """Defaults < site configuration < --config file < flags, as strings."""
    settings = dict(DEFAULTS[command])
    settings.update(UtilsConfig.getTaskConfig(SECTIONS[command]))
    if args.configFile is not None:
        settings.update(UtilsConfig.readKeyValueFile(args.configFile))
    for key, value in vars(args).items():
        if key in ("command", "configFile", "debug", "warning", "error"):
            continue
        if value is not None:
            settings[key] = value
    return settings


def requireSettings(settings, *keys):
    for key in keys:
        if settings.get(key) in (None, ""):
            raise RuntimeError("Missing required setting '{0}'".format(key))


def absolutePath(path):
    """Resolves against the caller's cwd; tasks run inside their working directory."""
    if path is None or path == "":
        return None
    return str(pathlib.Path(path).expanduser().resolve())


def optionalInt(settings, key):
    if settings.get(key) in (None, ""):
        return None
    return parseScalar(settings[key], int, key)


def createGenerateInData(settings):
    requireSettings(settings, "channels", "available")
    numberOfChannels = parseScalar(settings["channels"], int, "channels")
    available = ChannelSet.fromChannels(
        numberOfChannels, parseList(settings["available"], int, "available")
    )
    stayChannel = optionalInt(settings, "stay")
    if stayChannel is not None and stayChannel not in available:
        raise RuntimeError("Stay channel {0} not in available set {1}".format(stayChannel, available))
    return {
        "numberOfChannels": numberOfChannels,
        "availableChannels": list(available),
        "seed": parseScalar(settings["seed"], int, "seed"),
        "stayChannel": stayChannel,
    }


def createSimulateInData(settings):
    requireSettings(settings, "offset")
    inData = {
        "offset": parseScalar(settings["offset"], int, "offset"),
        "seed": parseScalar(settings["seed"], int, "seed"),
        "horizon": optionalInt(settings, "horizon"),
        "algorithm": settings["algo"],
    }
    listAvailable = []
    for user in (1, 2):
        scheduleFile = settings.get("schedule{0}".format(user))
        if scheduleFile:
            inData["scheduleFile{0}".format(user)] = absolutePath(scheduleFile)
            continue
        requireSettings(settings, "channels", "available{0}".format(user))
        numberOfChannels = parseScalar(settings["channels"], int, "channels")
        available = ChannelSet.fromChannels(
            numberOfChannels,
            parseList(settings["available{0}".format(user)], int, "available{0}".format(user)),
        )
        stayChannel = optionalInt(settings, "stay{0}".format(user))
        if stayChannel is not None and stayChannel not in available:
            raise RuntimeError(
                "Stay channel {0} of user {1} not in {2}".format(stayChannel, user, available)
            )
        inData["numberOfChannels"] = numberOfChannels
        inData["availableChannels{0}".format(user)] = list(available)
        inData["stayChannel{0}".format(user)] = stayChannel
        listAvailable.append(available)
    if len(listAvailable) == 2 and not listAvailable[0].intersects(listAvailable[1]):
        raise RuntimeError(
            "Available sets {0} and {1} share no channel".format(listAvailable[0], listAvailable[1])
        )
    if inData["offset"] < 0:
        raise RuntimeError("Offset must be non-negative, got {0}".format(inData["offset"]))
    return inData


def createVerifyInData(settings):
    gates = parseList(settings["gate"], str, "gate")
    for gate in gates:
        if gate not in UtilsVerify.GATES:
            raise RuntimeError("Unknown verification gate '{0}'".format(gate))
    inData = {"gates": gates, "masterSeed": parseScalar(settings["seed"], int, "seed")}
    numberOfSeeds = optionalInt(settings, "seeds")
    if numberOfSeeds is not None:
        inData["seeds"] = numberOfSeeds
    numberOfConfigurations = optionalInt(settings, "configurations")
    if numberOfConfigurations is None:
        numberOfConfigurations = optionalInt(settings, "sampled_configurations")
    if numberOfConfigurations is not None:
        inData["configurations"] = numberOfConfigurations
    return inData


def createExperimentInData(settings):
    requireSettings(settings, "channels", "common", "trials", "seed")
    inData = {
        "numberOfChannels": parseScalar(settings["channels"], int, "channels"),
        "theta": parseList(settings["theta"], float, "theta"),
        "common": parseScalar(settings["common"], int, "common"),
        "trials": parseScalar(settings["trials"], int, "trials"),
        "masterSeed": parseScalar(settings["seed"], int, "seed"),
        "algorithms": parseList(settings["algo"], str, "algo"),
        "horizon": optionalInt(settings, "horizon"),
        "model": settings["model"],
        "out": absolutePath(settings.get("out")),
    }
    if len(inData["theta"]) == 0:
        raise RuntimeError("No theta value given")
    for theta in inData["theta"]:
        UtilsExperiment.ExperimentConfig(
            numberOfChannels=inData["numberOfChannels"],
            theta=theta,
            common=inData["common"],
            trials=inData["trials"],
            masterSeed=inData["masterSeed"],
            algorithms=tuple(inData["algorithms"]),
            horizon=inData["horizon"],
            model=inData["model"],
        )
    return inData


def createTask(command, inData):
    # Imported here: the task layer pulls in multiprocessing managers
    if command == "generate":
        from zosrdv.tasks.ScheduleTasks import GenerateSchedule
        return GenerateSchedule(inData=inData)
    elif command == "simulate":
        from zosrdv.tasks.ScheduleTasks import SimulatePair
        return SimulatePair(inData=inData)
    elif command == "verify":
        from zosrdv.tasks.VerifyTasks import ControlVerify
        return ControlVerify(inData=inData)
    from zosrdv.tasks.RendezvousExperiment import ControlRendezvousExperiment
    return ControlRendezvousExperiment(inData=inData)


def report(command, outData, stdout):
    """Prints the result and returns the exit code."""
    if command == "generate":
        stdout.write(outData["scheduleText"])
    elif command == "simulate":
        stdout.write(json.dumps(outData, indent=4) + "\n")
    elif command == "verify":
        for dictReport in outData["reports"]:
            stdout.write("{0}: {1}\n".format(dictReport["description"], "PASS" if dictReport["pass"] else "FAIL"))
        if not outData["pass"]:
            return EXIT_FAILURE
    else:
        if outData.get("out") is None:
            stdout.write(outData["csv"])
        zosTimeouts = sum(
            stats["timeoutCount"] for stats in outData["ttrStats"] if stats["algorithm"] == "zos"
        )
        if zosTimeouts > 0:
            return EXIT_FAILURE
    return EXIT_SUCCESS


def main(argv=None, stdout=None):
    if stdout is None:
        stdout = sys.stdout
    parser = createParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_CONFIGURATION if e.code else EXIT_SUCCESS
    level = UtilsLogging.getLevelFromFlags(args.debug, args.warning, args.error)
    logger = UtilsLogging.getLogger(level)
    builders = {
        "generate": createGenerateInData,
        "simulate": createSimulateInData,
        "verify": createVerifyInData,
        "experiment": createExperimentInData,
    }
    try:
        settings = collectSettings(args.command, args)
        inData = builders[args.command](settings)
        task = createTask(args.command, inData)
        jsonschema.validate(instance=inData, schema=task.getInDataSchema())
    except (RuntimeError, OSError, jsonschema.ValidationError) as e:
        logger.error("Invalid configuration: %s", getattr(e, "message", e))
        return EXIT_INVALID_CONFIGURATION
    task.execute()
    if task.isFailure():
        logger.error("Error when executing {0}!".format(task.__class__.__name__))
        return EXIT_FAILURE
    return report(args.command, task.outData, stdout)
