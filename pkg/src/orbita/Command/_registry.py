command_registry = {}


def register(name: str):
    def register_(cls):
        """
        Class decorator to register a command line subcommand
        :param cls: the class to register. Must provide `add_arguments(parser)`
                    and `run(args, config) -> ResultTable`
        """
        if name in command_registry:
            raise ValueError("command {} registered twice".format(name))
        cls.name = name
        command_registry[name] = cls
        return cls

    return register_
